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

// dpst_sim: campaign, conditioning and tau-sweep front end.

#include "cli/commands.hpp"
#include "cli/config.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

enum ExitCode : int
{
    kOk = 0,
    kFailure = 1,
    kConfigError = 2,
    kIoError = 3,
    kNumericalError = 4,
};

struct Flags
{
    std::optional<std::string> config;
    std::optional<std::string> isd, mode, drops, seed, tau_frac, tx_os, rx_os, out, threads, tau_grid;
    std::vector<std::string> set;
};

void add_common_flags(CLI::App &cmd, Flags &f)
{
    cmd.add_option("--config", f.config, "Flat key = value configuration file");
    cmd.add_option("--isd", f.isd, "Inter-site distances in meters, comma separated (default 20,50,150)");
    cmd.add_option("--mode", f.mode, "Channel modes: los, dpst, ideal, comma separated");
    cmd.add_option("--drops", f.drops, "Monte Carlo drops per ISD");
    cmd.add_option("--seed", f.seed, "Master seed");
    cmd.add_option("--tau-frac", f.tau_frac, "Delay of the second antenna as a fraction of the symbol period");
    cmd.add_option("--tx-os", f.tx_os, "Transmit oversampling ratio R");
    cmd.add_option("--rx-os", f.rx_os, "Receiver oversampling factor P");
    cmd.add_option("--out", f.out, "Output directory");
    cmd.add_option("--threads", f.threads, "Worker threads (0 = all cores)");
    cmd.add_option("--set", f.set, "Override any configuration key, as key=value (repeatable)");
}

std::vector<dpst::cli::ConfigEntry> collect_overrides(const Flags &f)
{
    std::vector<dpst::cli::ConfigEntry> out;
    const auto push = [&](const char *key, const std::optional<std::string> &v) {
        if (v)
            out.emplace_back(key, *v);
    };
    for (const std::string &kv : f.set)
    {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw dpst::ConfigError("set", "expected key=value, got '" + kv + "'");
        out.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
    push("isd", f.isd);
    push("mode", f.mode);
    push("drops", f.drops);
    push("seed", f.seed);
    push("tau_frac", f.tau_frac);
    push("tx_os", f.tx_os);
    push("rx_os", f.rx_os);
    push("out", f.out);
    push("threads", f.threads);
    push("tau_grid", f.tau_grid);
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Pulse shaping diversity (DPST) simulator for dense small cell 2x2 MIMO networks"};
    app.require_subcommand(1);

    Flags flags;
    CLI::App *campaign = app.add_subcommand("campaign", "Run the SINR / throughput CDF campaign");
    CLI::App *conditioning = app.add_subcommand("conditioning", "Rank and condition number of LOS, DPST and ideal channels");
    CLI::App *sweep = app.add_subcommand("tau-sweep", "Condition number and median SINR versus the fractional delay");
    for (CLI::App *cmd : {campaign, conditioning, sweep})
        add_common_flags(*cmd, flags);
    sweep->add_option("--tau-grid", flags.tau_grid, "Comma separated delay fractions in [0, 1)");

    CLI11_PARSE(app, argc, argv);

    try
    {
        const std::optional<std::filesystem::path> file =
            flags.config ? std::optional<std::filesystem::path>(*flags.config) : std::nullopt;
        const dpst::cli::RunConfig config = dpst::cli::parse_config(file, collect_overrides(flags));

        const auto start = std::chrono::steady_clock::now();
        if (campaign->parsed())
        {
            const auto outcome = dpst::cli::cmd_campaign(config);
            for (double isd : config.isd_m)
            {
                std::printf("ISD %6g m:", isd);
                for (auto mode : config.modes)
                    std::printf("  %s median SINR %7.2f dB, %7.2f Mbps", std::string(dpst::link::to_string(mode)).c_str(),
                                outcome.result.at(isd, mode, dpst::network::Metric::EffectiveSinrDb).median(),
                                outcome.result.at(isd, mode, dpst::network::Metric::ThroughputBps).median() / 1e6);
                std::printf("\n");
            }
            std::printf("wrote %zu files to %s\n", outcome.files.size(), config.output_dir.string().c_str());
        }
        else if (conditioning->parsed())
        {
            dpst::cli::cmd_conditioning(config, std::cout);
        }
        else if (sweep->parsed())
        {
            for (const auto &row : dpst::cli::cmd_tau_sweep(config))
                std::printf("tau %.4f  cond(H_N) %10.4g  median DPST SINR %7.2f dB\n", row.tau_fraction,
                            row.condition_number, row.median_effective_sinr_db);
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::fprintf(stderr, "done in %.2f s\n", seconds);
        return kOk;
    }
    catch (const dpst::ConfigError &e)
    {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kConfigError;
    }
    catch (const dpst::cli::IoError &e)
    {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return kIoError;
    }
    catch (const dpst::NumericalError &e)
    {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kNumericalError;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kFailure;
    }
}
