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

#include <catch_amalgamated.hpp>

#include "dpst/errors.hpp"
#include "dpst/network.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace dpst::network;
using dpst::link::ChannelMode;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

const ChannelMode kModes[] = {ChannelMode::CorrelatedLos, ChannelMode::Dpst, ChannelMode::Ideal};

Scenario default_scenario()
{
    return Scenario::build(RadioParams{}, dpst::pulse::PulseConfig{});
}

} // namespace

TEST_CASE("build_layout - hexagonal ring")
{
    const Layout l = build_layout(50.0);
    CHECK(l.bs_positions[0].x == 0.0);
    CHECK(l.bs_positions[0].y == 0.0);
    for (std::size_t i = 1; i < 7; ++i)
    {
        CHECK_THAT(distance(l.bs_positions[0], l.bs_positions[i]), WithinAbs(50.0, 1e-12));
        const std::size_t next = i == 6 ? 1 : i + 1;
        CHECK_THAT(distance(l.bs_positions[i], l.bs_positions[next]), WithinAbs(50.0, 1e-12));
    }
    CHECK_THROWS_AS(build_layout(0.0), dpst::DomainError);
    CHECK_THROWS_AS(build_layout(-5.0), dpst::DomainError);
}

TEST_CASE("drop_ue - stays in the central cell")
{
    for (double isd : {20.0, 50.0, 150.0})
    {
        const Layout l = build_layout(isd);
        dpst::Rng rng(31);
        double sx = 0.0, sy = 0.0;
        const int n = 5000;
        for (int i = 0; i < n; ++i)
        {
            const Point p = drop_ue(l, rng);
            CHECK(l.in_central_cell(p));
            const double d0 = distance(p, l.bs_positions[0]);
            CHECK(d0 >= kMinUeDistanceM);
            CHECK(d0 <= isd / std::sqrt(3.0) + 1e-9);
            for (std::size_t j = 1; j < 7; ++j)
                CHECK(distance(p, l.bs_positions[j]) >= d0);
            sx += p.x;
            sy += p.y;
        }
        CHECK(std::abs(sx / n) < 0.03 * isd);
        CHECK(std::abs(sy / n) < 0.03 * isd);
    }
    dpst::Rng rng(1);
    CHECK_THROWS_AS(drop_ue(build_layout(2.0), rng), dpst::DomainError);
}

TEST_CASE("RadioParams - unit conversions")
{
    RadioParams r;
    CHECK_THAT(r.p_bs_watts(), WithinRel(1.0, 1e-12));
    // -174 dBm/Hz + 70 dB + 9 dB = -95 dBm
    CHECK_THAT(10.0 * std::log10(r.noise_watts() * 1e3), WithinAbs(-95.0, 0.01));
}

TEST_CASE("run_drop - structure")
{
    const Scenario s = default_scenario();
    const Layout l = build_layout(50.0);
    dpst::Rng rng(32);
    const DropResult d = run_drop(l, drop_ue(l, rng), s, kModes, rng);
    CHECK(d.interferer_distances_m.size() == 6);
    CHECK(d.results.size() == 3);
    for (ChannelMode m : kModes)
    {
        const auto &r = d.results.at(m);
        CHECK(r.channel_mode == m);
        CHECK(r.sinr_per_stream.size() == 2);
        CHECK(std::isfinite(r.effective_sinr_db));
        CHECK(r.throughput_bps >= 0.0);
    }
}

TEST_CASE("run_drops - independent of thread count")
{
    const Scenario s = default_scenario();
    const Layout l = build_layout(20.0);
    const auto one = run_drops(l, s, kModes, 40, 77, 1);
    const auto four = run_drops(l, s, kModes, 40, 77, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i)
    {
        CHECK(one[i].ue_position.x == four[i].ue_position.x);
        for (ChannelMode m : kModes)
        {
            CHECK(one[i].results.at(m).effective_sinr_db == four[i].results.at(m).effective_sinr_db);
            CHECK(one[i].results.at(m).throughput_bps == four[i].results.at(m).throughput_bps);
        }
    }
    const auto other_seed = run_drops(l, s, kModes, 40, 78, 1);
    CHECK(other_seed[0].ue_position.x != one[0].ue_position.x);
}

TEST_CASE("run_drops - decorrelated channels outperform the correlated LOS channel")
{
    const Scenario s = default_scenario();
    const auto drops = run_drops(build_layout(50.0), s, kModes, 300, 5, 0);
    int dpst_better = 0, ideal_better = 0;
    for (const DropResult &d : drops)
    {
        const double los = d.results.at(ChannelMode::CorrelatedLos).effective_sinr_db;
        dpst_better += d.results.at(ChannelMode::Dpst).effective_sinr_db >= los;
        ideal_better += d.results.at(ChannelMode::Ideal).effective_sinr_db >= los;
    }
    CHECK(dpst_better >= 285);
    CHECK(ideal_better >= 285);
}

TEST_CASE("CdfSummary")
{
    const CdfSummary c(Metric::ThroughputBps, {5.0, 1.0, 3.0, 2.0, 4.0});
    CHECK(c.sorted_samples() == std::vector<double>{1.0, 2.0, 3.0, 4.0, 5.0});
    CHECK(c.median() == 3.0);
    CHECK(c.percentile(0.0) == 1.0);
    CHECK(c.percentile(100.0) == 5.0);
    CHECK_THAT(c.percentile(10.0), WithinAbs(1.4, 1e-12));
    CHECK(c.cumulative_probability(0) == 0.2);
    CHECK(c.cumulative_probability(4) == 1.0);

    double prev = -1e300;
    for (double p = 0.0; p <= 100.0; p += 0.5)
    {
        CHECK(c.percentile(p) >= prev);
        prev = c.percentile(p);
    }

    CHECK_THROWS_AS(c.percentile(101.0), dpst::DomainError);
    CHECK_THROWS_AS(CdfSummary(Metric::ThroughputBps, {}).median(), dpst::ShapeError);
}

TEST_CASE("run_campaign - medians and gains")
{
    CampaignSpec spec;
    spec.isd_m = {20.0, 150.0};
    spec.n_drops = 300;
    spec.seed = 3;
    const CampaignResult r = run_campaign(spec, default_scenario());
    CHECK(r.cdfs.size() == 2 * 3 * 2);
    for (double isd : spec.isd_m)
    {
        CHECK(r.at(isd, ChannelMode::Dpst, Metric::EffectiveSinrDb).size() == 300);
        CHECK(r.median_gain_db(isd, ChannelMode::Dpst, ChannelMode::CorrelatedLos) > 3.0);
        CHECK(r.median_throughput_ratio(isd, ChannelMode::Dpst, ChannelMode::CorrelatedLos) > 1.3);
        CHECK(std::abs(r.median_gain_db(isd, ChannelMode::Dpst, ChannelMode::Ideal)) < 0.5);
    }
    CHECK(r.median_gain_db(150.0, ChannelMode::Dpst, ChannelMode::CorrelatedLos) >
          r.median_gain_db(20.0, ChannelMode::Dpst, ChannelMode::CorrelatedLos));
    CHECK_THROWS(r.at(50.0, ChannelMode::Dpst, Metric::EffectiveSinrDb));

    spec.n_drops = 0;
    CHECK_THROWS_AS(run_campaign(spec, default_scenario()), dpst::DomainError);
}
