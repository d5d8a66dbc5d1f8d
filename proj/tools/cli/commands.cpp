// SPDX-License-Identifier: Apache-2.0
//
// dpst - pulse shaping diversity simulator for dense small cell MIMO networks
// Copyright (C) 2026 The dpst authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "cli/commands.hpp"

#include "dpst/channel.hpp"
#include "dpst/numerics.hpp"
#include "dpst/pulse.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace dpst::cli
{
namespace
{

using nlohmann::ordered_json;

void ensure_directory(const std::filesystem::path &dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

std::ofstream open_output(const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish(std::ofstream &out, const std::filesystem::path &path)
{
    out.flush();
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

ordered_json number_or_inf(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

std::string format_condition(double v)
{
    if (std::isinf(v))
        return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

std::string cdf_file_name(const char *prefix, double isd_m, link::ChannelMode mode)
{
    return std::string(prefix) + "_" + format_double(isd_m) + "_" + std::string(link::to_string(mode)) + ".csv";
}

void write_cdf_csv(const std::filesystem::path &path, const network::CdfSummary &cdf, const std::string &hash)
{
    std::ofstream out = open_output(path);
    out << "# config_hash=" << hash << '\n' << "value,cumulative_probability\n";
    const auto &samples = cdf.sorted_samples();
    for (std::size_t i = 0; i < samples.size(); ++i)
        out << format_double(samples[i]) << ',' << format_double(cdf.cumulative_probability(i)) << '\n';
    finish(out, path);
}

CdfFile read_cdf_csv(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read '" + path.string() + "'");

    CdfFile file;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        throw IoError(path.string() + ": missing config hash comment");
    file.header_comment = line.substr(2);
    if (!std::getline(in, line) || line != "value,cumulative_probability")
        throw IoError(path.string() + ": unexpected column header");

    const auto parse = [&](std::string_view text) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw IoError(path.string() + ": malformed number '" + std::string(text) + "'");
        return v;
    };
    while (std::getline(in, line))
    {
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw IoError(path.string() + ": malformed row '" + line + "'");
        file.values.push_back(parse(std::string_view(line).substr(0, comma)));
        file.cumulative_probability.push_back(parse(std::string_view(line).substr(comma + 1)));
    }
    return file;
}

CampaignOutcome cmd_campaign(const RunConfig &config)
{
    config.validate();
    ensure_directory(config.output_dir);

    const network::Scenario scenario = network::Scenario::build(config.radio, config.pulse);
    network::CampaignSpec spec;
    spec.isd_m = config.isd_m;
    spec.modes = config.modes;
    spec.n_drops = config.n_drops;
    spec.seed = config.seed;
    spec.threads = config.threads;

    CampaignOutcome outcome;
    outcome.result = network::run_campaign(spec, scenario);
    const std::string hash = config_hash(config);

    using link::ChannelMode;
    using network::Metric;
    ordered_json summary;
    summary["config_hash"] = hash;
    summary["seed"] = config.seed;
    summary["n_drops"] = config.n_drops;
    summary["tau_fraction"] = config.pulse.tau_fraction;
    ordered_json per_isd = ordered_json::array();

    const auto has = [&](ChannelMode m) {
        return std::find(config.modes.begin(), config.modes.end(), m) != config.modes.end();
    };

    for (double isd : config.isd_m)
    {
        ordered_json entry;
        entry["isd_m"] = isd;
        for (ChannelMode mode : config.modes)
        {
            const auto &sinr = outcome.result.at(isd, mode, Metric::EffectiveSinrDb);
            const auto &tput = outcome.result.at(isd, mode, Metric::ThroughputBps);
            const std::filesystem::path sinr_path = config.output_dir / cdf_file_name("sinr_cdf", isd, mode);
            const std::filesystem::path tput_path = config.output_dir / cdf_file_name("tput_cdf", isd, mode);
            write_cdf_csv(sinr_path, sinr, hash);
            write_cdf_csv(tput_path, tput, hash);
            outcome.files.push_back(sinr_path);
            outcome.files.push_back(tput_path);

            const std::string name(link::to_string(mode));
            entry["median_effective_sinr_db"][name] = sinr.median();
            entry["median_throughput_bps"][name] = tput.median();
        }
        if (has(ChannelMode::Dpst) && has(ChannelMode::CorrelatedLos))
        {
            entry["median_gain_db"] = outcome.result.median_gain_db(isd, ChannelMode::Dpst, ChannelMode::CorrelatedLos);
            entry["throughput_ratio"] =
                outcome.result.median_throughput_ratio(isd, ChannelMode::Dpst, ChannelMode::CorrelatedLos);
        }
        if (has(ChannelMode::Dpst) && has(ChannelMode::Ideal))
        {
            entry["dpst_minus_ideal_db"] = outcome.result.median_gain_db(isd, ChannelMode::Dpst, ChannelMode::Ideal);
            entry["dpst_to_ideal_throughput_ratio"] =
                outcome.result.median_throughput_ratio(isd, ChannelMode::Dpst, ChannelMode::Ideal);
        }
        per_isd.push_back(std::move(entry));
    }
    summary["isd"] = std::move(per_isd);

    const std::filesystem::path summary_path = config.output_dir / "summary.json";
    std::ofstream out = open_output(summary_path);
    out << summary.dump(2) << '\n';
    finish(out, summary_path);
    outcome.files.push_back(summary_path);
    return outcome;
}

std::vector<ConditioningRow> conditioning_table(const pulse::PulseConfig &pulse)
{
    const numerics::ComplexMatrix los = channel::los_component(channel::LosMode::FullCorrelation);
    const numerics::ComplexMatrix dpst = pulse::compose_oversampled(los, pulse).virtual_channel;
    const numerics::ComplexMatrix ideal = channel::ideal_channel(los);

    std::vector<ConditioningRow> rows;
    for (const auto &[name, m] : {std::pair<const char *, const numerics::ComplexMatrix &>{"los", los},
                                  {"dpst", dpst},
                                  {"ideal", ideal}})
        rows.push_back({name, numerics::rank(m), numerics::condition_number(m)});
    return rows;
}

std::vector<ConditioningRow> cmd_conditioning(const RunConfig &config, std::ostream &out)
{
    config.validate();
    const std::vector<ConditioningRow> rows = conditioning_table(config.pulse);

    char line[128];
    out << "Channel status           Rank  Condition number\n";
    for (const auto &row : rows)
    {
        const char *label = row.channel == "los" ? "2x2 LOS channel" : row.channel == "dpst" ? "2x2 DPST model" : "2x2 optimum channel";
        std::snprintf(line, sizeof line, "%-24s %4zu  %s\n", label, row.rank, format_condition(row.condition_number).c_str());
        out << line;
    }

    ensure_directory(config.output_dir);
    ordered_json doc;
    doc["config_hash"] = config_hash(config);
    doc["tau_fraction"] = config.pulse.tau_fraction;
    doc["tx_oversampling"] = config.pulse.tx_oversampling;
    doc["rx_oversampling"] = config.pulse.rx_oversampling;
    doc["block_symbols"] = config.pulse.block_symbols;
    ordered_json table = ordered_json::array();
    for (const auto &row : rows)
        table.push_back({{"channel", row.channel}, {"rank", row.rank}, {"condition_number", number_or_inf(row.condition_number)}});
    doc["rows"] = std::move(table);

    const std::filesystem::path path = config.output_dir / "conditioning.json";
    std::ofstream file = open_output(path);
    file << doc.dump(2) << '\n';
    finish(file, path);
    return rows;
}

std::vector<TauSweepRow> cmd_tau_sweep(const RunConfig &config)
{
    config.validate();
    ensure_directory(config.output_dir);

    const numerics::ComplexMatrix los = channel::los_component(channel::LosMode::FullCorrelation);
    const network::Layout layout = network::build_layout(config.isd_m.front());
    const link::ChannelMode modes[] = {link::ChannelMode::Dpst};

    std::vector<TauSweepRow> rows;
    for (double tau : config.tau_grid)
    {
        pulse::PulseConfig pc = config.pulse;
        pc.tau_fraction = tau;
        const network::Scenario scenario = network::Scenario::build(config.radio, pc);

        TauSweepRow row;
        row.tau_fraction = tau;
        row.condition_number =
            numerics::condition_number(pulse::compose_oversampled(los, scenario.kernels).virtual_channel);
        const auto drops = network::run_drops(layout, scenario, modes, config.n_drops, config.seed, config.threads);
        row.median_effective_sinr_db =
            network::summarize(drops, link::ChannelMode::Dpst, network::Metric::EffectiveSinrDb).median();
        rows.push_back(row);
    }

    const std::filesystem::path path = config.output_dir / "tau_sweep.csv";
    std::ofstream out = open_output(path);
    out << "# config_hash=" << config_hash(config) << '\n'
        << "tau_fraction,cond_H_N,median_effective_sinr_db\n";
    for (const auto &row : rows)
        out << format_double(row.tau_fraction) << ','
            << (std::isinf(row.condition_number) ? std::string("inf") : format_double(row.condition_number)) << ','
            << format_double(row.median_effective_sinr_db) << '\n';
    finish(out, path);
    return rows;
}

} // namespace dpst::cli
