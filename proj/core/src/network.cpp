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

#include "dpst/network.hpp"

#include "dpst/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

namespace dpst::network
{

double distance(Point a, Point b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

bool Layout::in_central_cell(Point p) const
{
    // Half-plane test against each neighbor: closer to the origin than to the neighbor.
    for (std::size_t i = 1; i < bs_positions.size(); ++i)
    {
        const Point n = bs_positions[i];
        if (p.x * n.x + p.y * n.y > 0.5 * (n.x * n.x + n.y * n.y))
            return false;
    }
    return true;
}

Layout build_layout(double isd_m)
{
    if (!(isd_m > 0.0) || !std::isfinite(isd_m))
        throw DomainError("build_layout: inter-site distance must be positive");
    Layout layout;
    layout.isd_m = isd_m;
    layout.bs_positions[0] = {0.0, 0.0};
    for (int k = 0; k < 6; ++k)
    {
        const double angle = k * std::numbers::pi / 3.0;
        layout.bs_positions[static_cast<std::size_t>(k) + 1] = {isd_m * std::cos(angle), isd_m * std::sin(angle)};
    }
    return layout;
}

Point drop_ue(const Layout &layout, Rng &rng)
{
    if (layout.isd_m / 2.0 <= kMinUeDistanceM)
        throw DomainError("drop_ue: cell is too small for the minimum UE distance");

    const double circumradius = layout.isd_m / std::sqrt(3.0);
    std::uniform_real_distribution<double> coord(-circumradius, circumradius);
    for (;;)
    {
        const double x = coord(rng);
        const double y = coord(rng);
        const Point p{x, y};
        if (layout.in_central_cell(p) && std::hypot(x, y) >= kMinUeDistanceM)
            return p;
    }
}

double RadioParams::p_bs_watts() const
{
    return std::pow(10.0, (p_bs_dbm - 30.0) / 10.0);
}

double RadioParams::noise_watts() const
{
    const double dbm = -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

Scenario Scenario::build(const RadioParams &radio, const pulse::PulseConfig &pulse)
{
    return {radio, pulse::PulseKernels::build(pulse)};
}

DropResult run_drop(const Layout &layout, Point ue, const Scenario &scenario, std::span<const link::ChannelMode> modes,
                    Rng &rng)
{
    const RadioParams &radio = scenario.radio;

    channel::LargeScaleParams serving_ls{radio.carrier_ghz, radio.shadowing_sigma_db, radio.antenna_gain_dbi,
                                         radio.serving_pathloss};
    channel::LargeScaleParams interferer_ls = serving_ls;
    interferer_ls.pathloss_model = radio.interferer_pathloss;

    DropResult out;
    out.ue_position = ue;
    out.serving_distance_m = std::max(distance(ue, layout.bs_positions[0]), kMinUeDistanceM);

    const channel::ChannelRealization serving = channel::draw_link(
        channel::LinkKind::Serving, {out.serving_distance_m, radio.nlos_correlation, radio.serving_los_mode},
        serving_ls, rng);

    std::vector<channel::ChannelRealization> interferers;
    interferers.reserve(layout.bs_positions.size() - 1);
    for (std::size_t j = 1; j < layout.bs_positions.size(); ++j)
    {
        const double d = std::max(distance(ue, layout.bs_positions[j]), kMinUeDistanceM);
        out.interferer_distances_m.push_back(d);
        interferers.push_back(channel::draw_link(channel::LinkKind::Interferer,
                                                 {d, radio.nlos_correlation, channel::LosMode::RankOneLos},
                                                 interferer_ls, rng));
    }

    const double p_bs = radio.p_bs_watts();
    link::NoiseModel noise;
    noise.n0 = radio.noise_watts();
    if (radio.interference)
        noise.phi = link::interference_covariance(interferers, p_bs);

    const numerics::ComplexMatrix h = serving.fading * std::sqrt(serving.large_scale_gain);
    for (link::ChannelMode mode : modes)
    {
        numerics::ComplexMatrix seen;
        switch (mode)
        {
        case link::ChannelMode::CorrelatedLos:
            seen = h;
            break;
        case link::ChannelMode::Dpst:
            seen = pulse::compose_oversampled(h, scenario.kernels).virtual_channel;
            break;
        case link::ChannelMode::Ideal:
            seen = channel::ideal_channel(h);
            break;
        }
        out.results[mode] = link::evaluate_link(seen, mode, noise, p_bs, radio.bandwidth_hz);
    }
    return out;
}

std::vector<DropResult> run_drops(const Layout &layout, const Scenario &scenario,
                                  std::span<const link::ChannelMode> modes, std::size_t n_drops, std::uint64_t seed,
                                  unsigned threads)
{
    std::vector<DropResult> drops(n_drops);
    const std::uint64_t stream = std::bit_cast<std::uint64_t>(layout.isd_m);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::size_t failure_index = n_drops;
    std::mutex failure_mutex;

    const auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n_drops; i = next.fetch_add(1))
        {
            try
            {
                Rng rng(derive_seed(seed, stream, i));
                const Point ue = drop_ue(layout, rng);
                drops[i] = run_drop(layout, ue, scenario, modes, rng);
            }
            catch (...)
            {
                // Keep the lowest failing index so the reported error does not depend on scheduling.
                std::lock_guard lock(failure_mutex);
                if (i < failure_index)
                {
                    failure_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };

    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n_drops, 1)));

    if (threads <= 1)
        worker();
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    if (failure)
        std::rethrow_exception(failure);
    return drops;
}

CdfSummary::CdfSummary(Metric metric, std::vector<double> samples) : metric_(metric), samples_(std::move(samples))
{
    std::sort(samples_.begin(), samples_.end());
}

double CdfSummary::percentile(double p) const
{
    if (samples_.empty())
        throw ShapeError("CdfSummary::percentile: no samples");
    if (!(p >= 0.0 && p <= 100.0))
        throw DomainError("CdfSummary::percentile: p must lie in [0, 100]");
    const double pos = p / 100.0 * static_cast<double>(samples_.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, samples_.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return samples_[lo] + frac * (samples_[hi] - samples_[lo]);
}

double CdfSummary::cumulative_probability(std::size_t i) const
{
    return static_cast<double>(i + 1) / static_cast<double>(samples_.size());
}

const CdfSummary &CampaignResult::at(double isd_m, link::ChannelMode mode, Metric metric) const
{
    const auto it = cdfs.find({isd_m, mode, metric});
    if (it == cdfs.end())
        throw ShapeError("CampaignResult: no CDF for ISD " + std::to_string(isd_m) + " and mode " +
                         std::string(link::to_string(mode)));
    return it->second;
}

double CampaignResult::median_gain_db(double isd_m, link::ChannelMode a, link::ChannelMode b) const
{
    return at(isd_m, a, Metric::EffectiveSinrDb).median() - at(isd_m, b, Metric::EffectiveSinrDb).median();
}

double CampaignResult::median_throughput_ratio(double isd_m, link::ChannelMode a, link::ChannelMode b) const
{
    return at(isd_m, a, Metric::ThroughputBps).median() / at(isd_m, b, Metric::ThroughputBps).median();
}

CdfSummary summarize(std::span<const DropResult> drops, link::ChannelMode mode, Metric metric)
{
    std::vector<double> samples;
    samples.reserve(drops.size());
    for (const DropResult &d : drops)
    {
        const link::LinkResult &r = d.results.at(mode);
        samples.push_back(metric == Metric::EffectiveSinrDb ? r.effective_sinr_db : r.throughput_bps);
    }
    return {metric, std::move(samples)};
}

CampaignResult run_campaign(const CampaignSpec &spec, const Scenario &scenario)
{
    if (spec.n_drops < 1)
        throw DomainError("run_campaign: at least one drop is required");
    if (spec.modes.empty())
        throw DomainError("run_campaign: no channel modes requested");

    CampaignResult out;
    for (double isd : spec.isd_m)
    {
        const Layout layout = build_layout(isd);
        const std::vector<DropResult> drops =
            run_drops(layout, scenario, spec.modes, spec.n_drops, spec.seed, spec.threads);
        for (link::ChannelMode mode : spec.modes)
            for (Metric metric : {Metric::EffectiveSinrDb, Metric::ThroughputBps})
                out.cdfs[{isd, mode, metric}] = summarize(drops, mode, metric);
    }
    return out;
}

} // namespace dpst::network
