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

#ifndef DPST_NETWORK_HPP
#define DPST_NETWORK_HPP

#include "dpst/channel.hpp"
#include "dpst/link.hpp"
#include "dpst/pulse.hpp"
#include "dpst/random.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace dpst::network
{

struct Point
{
    double x = 0.0;
    double y = 0.0;
};

double distance(Point a, Point b);

// Single tier hexagonal layout: serving BS at the origin, six neighbors at
// angles 0, 60, ..., 300 degrees on a circle of radius isd.
struct Layout
{
    double isd_m = 50.0;
    std::array<Point, 7> bs_positions{};
    double region_m = 500.0; // side of the square simulation area

    // Inside the Voronoi hexagon of the central BS.
    bool in_central_cell(Point p) const;
};

Layout build_layout(double isd_m);

// Minimum UE-BS separation enforced by drop_ue.
inline constexpr double kMinUeDistanceM = 1.0;

// Uniform position in the central cell by rejection sampling.
Point drop_ue(const Layout &layout, Rng &rng);

// Radio parameters in linear or physical units; dBm conversions happen here only.
struct RadioParams
{
    double carrier_ghz = 2.0;
    double bandwidth_hz = 10e6;
    double p_bs_dbm = 30.0;
    double noise_figure_db = 9.0;
    double shadowing_sigma_db = 3.0;
    double antenna_gain_dbi = 5.0;
    double nlos_correlation = 0.5;
    channel::LosMode serving_los_mode = channel::LosMode::FullCorrelation;
    channel::PathlossModel serving_pathloss = channel::PathlossModel::UrbanMicroLos;
    channel::PathlossModel interferer_pathloss = channel::PathlossModel::UrbanMicroNlos;
    bool interference = true;

    double p_bs_watts() const;
    double noise_watts() const; // thermal noise over the bandwidth plus noise figure
};

// Everything a drop needs that does not change between drops.
struct Scenario
{
    RadioParams radio;
    pulse::PulseKernels kernels;

    static Scenario build(const RadioParams &radio, const pulse::PulseConfig &pulse);
};

struct DropResult
{
    Point ue_position;
    double serving_distance_m = 0.0;
    std::vector<double> interferer_distances_m;
    std::map<link::ChannelMode, link::LinkResult> results;
};

// One Monte Carlo drop. Large-scale gains and fading of all seven links are drawn
// once and shared by every requested mode.
DropResult run_drop(const Layout &layout, Point ue, const Scenario &scenario, std::span<const link::ChannelMode> modes,
                    Rng &rng);

// Drops 0..n-1 of one layout, each seeded from (seed, isd, index). The output is
// identical for any thread count; threads = 0 uses the hardware concurrency.
std::vector<DropResult> run_drops(const Layout &layout, const Scenario &scenario,
                                  std::span<const link::ChannelMode> modes, std::size_t n_drops, std::uint64_t seed,
                                  unsigned threads = 0);

enum class Metric
{
    EffectiveSinrDb,
    ThroughputBps
};

// Empirical CDF of one metric.
class CdfSummary
{
public:
    CdfSummary() = default;
    CdfSummary(Metric metric, std::vector<double> samples);

    Metric metric() const noexcept { return metric_; }
    const std::vector<double> &sorted_samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }

    // p in [0, 100]; linear interpolation between order statistics.
    double percentile(double p) const;
    double median() const { return percentile(50.0); }
    // (i + 1) / n for the i-th sorted sample.
    double cumulative_probability(std::size_t i) const;

private:
    Metric metric_ = Metric::EffectiveSinrDb;
    std::vector<double> samples_;
};

struct CampaignKey
{
    double isd_m;
    link::ChannelMode mode;
    Metric metric;

    auto operator<=>(const CampaignKey &) const = default;
};

struct CampaignSpec
{
    std::vector<double> isd_m{20.0, 50.0, 150.0};
    std::vector<link::ChannelMode> modes{link::ChannelMode::CorrelatedLos, link::ChannelMode::Dpst,
                                         link::ChannelMode::Ideal};
    std::size_t n_drops = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

struct CampaignResult
{
    std::map<CampaignKey, CdfSummary> cdfs;

    const CdfSummary &at(double isd_m, link::ChannelMode mode, Metric metric) const;
    // Difference of median effective SINR, a minus b, in dB.
    double median_gain_db(double isd_m, link::ChannelMode a, link::ChannelMode b) const;
    // Ratio of median throughputs a / b.
    double median_throughput_ratio(double isd_m, link::ChannelMode a, link::ChannelMode b) const;
};

CdfSummary summarize(std::span<const DropResult> drops, link::ChannelMode mode, Metric metric);

CampaignResult run_campaign(const CampaignSpec &spec, const Scenario &scenario);

} // namespace dpst::network

#endif
