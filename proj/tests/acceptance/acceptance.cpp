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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
//
//   dpst_acceptance [--out DIR]

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "dpst/channel.hpp"
#include "dpst/link.hpp"
#include "dpst/network.hpp"
#include "dpst/numerics.hpp"
#include "dpst/pulse.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using dpst::link::ChannelMode;
using dpst::network::Metric;
using dpst::numerics::ComplexMatrix;

namespace
{

// Thresholds.
constexpr double kTableRuntimeS = 5.0;
constexpr double kIdealCondTol = 1e-6;
constexpr double kDpstCondMax = 2.0;
constexpr double kSweepCondLo = 1.0;
constexpr double kSweepCondHi = 1.4;

constexpr std::size_t kCampaignDrops = 10000;
constexpr double kCampaignRuntimeS = 120.0;
constexpr double kIsds[] = {20.0, 50.0, 150.0};
constexpr double kTargetGainDb[] = {6.5, 11.0, 14.0};
constexpr double kGainTolDb = 3.0;

constexpr double kNearIdealDb = 0.5;
constexpr double kRatioLo = 1.7;
constexpr double kRatioHi = 2.2;
constexpr double kIdealThroughputRel = 0.05;

constexpr std::size_t kCollapseDrops = 1000;
constexpr double kCollapseTolDb = 1e-6;

constexpr double kSymbolSnrDb = 30.0;
constexpr int kSymbolBlocks = 1000;
constexpr double kMseRelTol = 0.20;

constexpr int kInterpConfigs = 10;

constexpr std::size_t kDeterminismDrops = 1000;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string fmt(double v, int prec = 4)
{
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(prec);
    s << v;
    return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

dpst::cli::RunConfig make_config(const fs::path &out, std::size_t drops, unsigned threads)
{
    return dpst::cli::parse_config(std::nullopt, {{"drops", std::to_string(drops)},
                                                  {"seed", "1"},
                                                  {"out", out.string()},
                                                  {"threads", std::to_string(threads)}});
}

Outcome table_reproduction(const fs::path &out)
{
    const auto t0 = std::chrono::steady_clock::now();
    dpst::cli::RunConfig cfg = make_config(out / "conditioning", 1, 0);
    std::ostringstream sink;
    const auto rows = dpst::cli::cmd_conditioning(cfg, sink);

    const ComplexMatrix los = dpst::channel::los_component(dpst::channel::LosMode::FullCorrelation);
    double best_sweep = std::numeric_limits<double>::infinity();
    bool sweep_hit = false;
    for (double tau : cfg.tau_grid)
    {
        dpst::pulse::PulseConfig pc = cfg.pulse;
        pc.tau_fraction = tau;
        const double c = dpst::numerics::condition_number(dpst::pulse::compose_oversampled(los, pc).virtual_channel);
        if (c >= kSweepCondLo && c <= kSweepCondHi)
            sweep_hit = true;
        best_sweep = std::min(best_sweep, c);
    }
    const double elapsed = seconds_since(t0);

    const auto &l = rows.at(0);
    const auto &d = rows.at(1);
    const auto &i = rows.at(2);
    const bool los_ok = l.rank == 1 && std::isinf(l.condition_number);
    const bool ideal_ok = i.rank == 2 && std::abs(i.condition_number - 1.0) <= kIdealCondTol;
    const bool dpst_ok = d.rank == 2 && std::isfinite(d.condition_number) && d.condition_number <= kDpstCondMax;

    return {los_ok && ideal_ok && dpst_ok && sweep_hit && elapsed < kTableRuntimeS,
            "los rank " + std::to_string(l.rank) + " cond " + fmt(l.condition_number) + "; dpst rank " +
                std::to_string(d.rank) + " cond " + fmt(d.condition_number) + "; ideal rank " +
                std::to_string(i.rank) + " cond " + fmt(i.condition_number, 9) + "; sweep min cond " +
                fmt(best_sweep) + (sweep_hit ? " (in range)" : " (none in range)") + "; " + fmt(elapsed, 2) + " s"};
}

Outcome median_gains(const dpst::network::CampaignResult &r, double elapsed)
{
    bool ok = elapsed < kCampaignRuntimeS;
    std::string detail;
    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < std::size(kIsds); ++k)
    {
        const double g = r.median_gain_db(kIsds[k], ChannelMode::Dpst, ChannelMode::CorrelatedLos);
        ok = ok && std::abs(g - kTargetGainDb[k]) <= kGainTolDb && g > prev;
        prev = g;
        detail += "ISD " + fmt(kIsds[k], 0) + " m gain " + fmt(g, 2) + " dB (target " + fmt(kTargetGainDb[k], 1) +
                  "); ";
    }
    return {ok, detail + fmt(elapsed, 1) + " s for " + std::to_string(kCampaignDrops) + " drops per ISD"};
}

Outcome near_optimality(const dpst::network::CampaignResult &r)
{
    bool ok = true;
    std::string detail;
    for (double isd : kIsds)
    {
        const double gap = r.median_gain_db(isd, ChannelMode::Dpst, ChannelMode::Ideal);
        ok = ok && std::abs(gap) <= kNearIdealDb;
        detail += "ISD " + fmt(isd, 0) + " m dpst-ideal " + fmt(gap, 6) + " dB; ";
    }
    return {ok, detail};
}

Outcome throughput_doubling(const dpst::network::CampaignResult &r)
{
    bool ok = true;
    std::string detail;
    for (double isd : kIsds)
    {
        const double ratio = r.median_throughput_ratio(isd, ChannelMode::Dpst, ChannelMode::CorrelatedLos);
        const double vs_ideal = r.median_throughput_ratio(isd, ChannelMode::Dpst, ChannelMode::Ideal);
        ok = ok && ratio >= kRatioLo && ratio <= kRatioHi && std::abs(vs_ideal - 1.0) <= kIdealThroughputRel;
        detail += "ISD " + fmt(isd, 0) + " m dpst/los " + fmt(ratio, 3) + " dpst/ideal " + fmt(vs_ideal, 5) + "; ";
    }
    return {ok, detail};
}

Outcome zero_delay_collapse()
{
    dpst::pulse::PulseConfig pc;
    pc.tau_fraction = 0.0;
    const auto scenario = dpst::network::Scenario::build(dpst::network::RadioParams{}, pc);
    const ChannelMode modes[] = {ChannelMode::CorrelatedLos, ChannelMode::Dpst};

    double worst = 0.0;
    std::size_t violations = 0, total = 0;
    for (double isd : kIsds)
    {
        const auto drops = dpst::network::run_drops(dpst::network::build_layout(isd), scenario, modes, kCollapseDrops,
                                                    1, 0);
        for (const auto &d : drops)
        {
            const double diff = std::abs(d.results.at(ChannelMode::Dpst).effective_sinr_db -
                                         d.results.at(ChannelMode::CorrelatedLos).effective_sinr_db);
            worst = std::max(worst, diff);
            violations += diff > kCollapseTolDb;
            ++total;
        }
    }
    return {violations == 0, std::to_string(violations) + "/" + std::to_string(total) +
                                 " drops differ by more than " + fmt(kCollapseTolDb, 6) + " dB; max |dpst-los| " +
                                 fmt(worst, 3) + " dB"};
}

Outcome symbol_consistency()
{
    const ComplexMatrix h = dpst::channel::los_component(dpst::channel::LosMode::FullCorrelation);
    const auto composite = dpst::pulse::compose_oversampled(h, dpst::pulse::PulseConfig{});
    const double p_bs = 1.0;
    const auto precoder = dpst::link::make_precoder(composite.virtual_channel, p_bs);

    // Average received power per antenna over noise power.
    const double rx_power = p_bs * composite.virtual_channel.squaredNorm() / 4.0;
    const dpst::link::NoiseModel noise{rx_power / std::pow(10.0, kSymbolSnrDb / 10.0), ComplexMatrix::Zero(2, 2)};
    const auto sinr = dpst::link::per_stream_sinr(composite.virtual_channel * precoder.w, noise.phi, noise.n0);

    dpst::Rng rng(2024);
    const int m = dpst::pulse::PulseConfig{}.block_symbols;
    double mse[2] = {0.0, 0.0};
    for (int b = 0; b < kSymbolBlocks; ++b)
    {
        const ComplexMatrix s = dpst::link::qpsk_block(2, m, rng);
        const ComplexMatrix e = dpst::link::transmit_and_estimate(s, composite, precoder, noise, rng) - s;
        for (int k = 0; k < 2; ++k)
            mse[k] += e.row(k).squaredNorm() / (static_cast<double>(m) * kSymbolBlocks);
    }

    bool ok = true;
    std::string detail;
    for (int k = 0; k < 2; ++k)
    {
        const double predicted = 1.0 / (1.0 + sinr[static_cast<std::size_t>(k)]);
        const double rel = std::abs(mse[k] - predicted) / predicted;
        ok = ok && rel <= kMseRelTol;
        detail += "stream " + std::to_string(k) + " mse " + fmt(mse[k], 7) + " predicted " + fmt(predicted, 7) +
                  " (rel " + fmt(rel, 3) + "); ";
    }
    return {ok, detail};
}

Outcome interpolation_oracle()
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> tau_dist(0.0, 1.0);
    std::uniform_int_distribution<int> m_dist(1, 16);
    std::uniform_int_distribution<int> r_dist(1, 8);
    std::size_t mismatches = 0, entries = 0;
    for (int c = 0; c < kInterpConfigs; ++c)
    {
        const double tau = tau_dist(rng);
        const int m = m_dist(rng);
        const int n = m * r_dist(rng);
        const ComplexMatrix s = dpst::pulse::interp_matrix(tau, m, n);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < m; ++j)
            {
                ++entries;
                const double expected = dpst::oracle::interp_entry(tau, m, n, k, j);
                mismatches += !(s(k, j).real() == expected && s(k, j).imag() == 0.0);
            }
    }
    return {mismatches == 0, std::to_string(mismatches) + " mismatches in " + std::to_string(entries) +
                                 " entries over " + std::to_string(kInterpConfigs) + " configurations"};
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism(const fs::path &out)
{
    const unsigned many = std::max(4U, std::thread::hardware_concurrency());
    const auto first = dpst::cli::cmd_campaign(make_config(out / "det_1", kDeterminismDrops, 1));
    dpst::cli::cmd_campaign(make_config(out / "det_1_again", kDeterminismDrops, 1));
    dpst::cli::cmd_campaign(make_config(out / "det_n", kDeterminismDrops, many));

    std::size_t compared = 0, differing = 0;
    for (const auto &file : first.files)
    {
        if (file.extension() != ".csv")
            continue;
        const std::string a = slurp(file);
        ++compared;
        differing += a != slurp(out / "det_1_again" / file.filename()) || a != slurp(out / "det_n" / file.filename());
    }
    return {compared == 18 && differing == 0, std::to_string(compared) + " CSV files compared, " +
                                                  std::to_string(differing) + " differ (1 vs 1 vs " +
                                                  std::to_string(many) + " threads)"};
}

} // namespace

int main(int argc, char **argv)
{
    fs::path out = "acceptance_out";
    for (int i = 1; i < argc; ++i)
    {
        const std::string arg = argv[i];
        if (arg == "--out" && i + 1 < argc)
            out = argv[++i];
        else
        {
            std::cerr << "usage: dpst_acceptance [--out DIR]\n";
            return 2;
        }
    }
    fs::create_directories(out);

    int failed = 0;
    const auto run = [&](int id, const char *name, const std::function<Outcome()> &check) {
        Outcome o;
        try
        {
            o = check();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        while (o.detail.ends_with(' ') || o.detail.ends_with(';'))
            o.detail.pop_back();
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail << std::endl;
    };

    run(1, "rank and condition table", [&] { return table_reproduction(out); });

    dpst::network::CampaignResult campaign;
    double campaign_s = 0.0;
    bool campaign_ok = false;
    std::string campaign_error;
    try
    {
        const auto t0 = std::chrono::steady_clock::now();
        campaign = dpst::cli::cmd_campaign(make_config(out / "campaign", kCampaignDrops, 0)).result;
        campaign_s = seconds_since(t0);
        campaign_ok = true;
    }
    catch (const std::exception &e)
    {
        campaign_error = e.what();
    }
    const auto needs_campaign = [&](const std::function<Outcome()> &f) {
        return [&, f] { return campaign_ok ? f() : Outcome{false, "campaign failed: " + campaign_error}; };
    };
    run(2, "median SINR gain over correlated LOS", needs_campaign([&] { return median_gains(campaign, campaign_s); }));
    run(3, "DPST close to ideal channel", needs_campaign([&] { return near_optimality(campaign); }));
    run(4, "median throughput ratio", needs_campaign([&] { return throughput_doubling(campaign); }));
    run(5, "zero delay gives no diversity", zero_delay_collapse);
    run(6, "symbol MSE matches predicted SINR", symbol_consistency);
    run(7, "interpolation matrix vs scalar oracle", interpolation_oracle);
    run(8, "campaign output determinism", [&] { return determinism(out); });

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
