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

#include "cli/config.hpp"
#include "dpst/errors.hpp"

#include <filesystem>
#include <fstream>

using namespace dpst::cli;
using dpst::link::ChannelMode;

namespace
{

std::string error_key(const std::vector<ConfigEntry> &overrides)
{
    try
    {
        parse_config(std::nullopt, overrides);
    }
    catch (const dpst::ConfigError &e)
    {
        return e.key();
    }
    return "<none>";
}

} // namespace

TEST_CASE("parse_config - defaults")
{
    const RunConfig c = parse_config(std::nullopt, {});
    CHECK(c.isd_m == std::vector<double>{20.0, 50.0, 150.0});
    CHECK(c.modes == std::vector<ChannelMode>{ChannelMode::CorrelatedLos, ChannelMode::Dpst, ChannelMode::Ideal});
    CHECK(c.n_drops == 10000);
    CHECK(c.seed == 1);
    CHECK(c.pulse.tau_fraction == 0.05);
    CHECK(c.pulse.tx_oversampling == 4);
    CHECK(c.pulse.rx_oversampling == 4);
    CHECK(c.pulse.block_symbols == 10);
    CHECK(c.radio.p_bs_dbm == 30.0);
    CHECK(c.tau_grid.size() == 20);
}

TEST_CASE("parse_config - errors name the key")
{
    CHECK(error_key({{"tau_frac", "1.5"}}) == "tau_frac");
    CHECK(error_key({{"tau_frac", "abc"}}) == "tau_frac");
    CHECK(error_key({{"bogus", "1"}}) == "bogus");
    CHECK(error_key({{"isd", "2"}}) == "isd");
    CHECK(error_key({{"isd", "20,,50"}}) == "isd");
    CHECK(error_key({{"mode", "los,optimum"}}) == "mode");
    CHECK(error_key({{"drops", "0"}}) == "drops");
    CHECK(error_key({{"drops", "-4"}}) == "drops");
    CHECK(error_key({{"tx_os", "0"}}) == "tx_os");
    CHECK(error_key({{"interference", "maybe"}}) == "interference");
    CHECK(error_key({{"serving_pathloss", "uma"}}) == "serving_pathloss");
    CHECK(error_key({{"tau_grid", "0.1,1.2"}}) == "tau_grid");
    CHECK(error_key({{"nlos_correlation", "1"}}) == "nlos_correlation");
    CHECK(error_key({{"out", ""}}) == "out");
    CHECK(error_key({{"seed", "7"}}) == "<none>");

    CHECK_THROWS_AS(parse_config(std::filesystem::path("/nonexistent/dpst.cfg"), {}), dpst::ConfigError);
}

TEST_CASE("parse_config_text")
{
    const auto entries = parse_config_text("# comment\n\nISD = 20, 50\n  tau-frac=0.1  # trailing\nmode=dpst\n");
    REQUIRE(entries.size() == 3);
    CHECK(entries[0] == ConfigEntry{"isd", "20, 50"});
    CHECK(entries[1] == ConfigEntry{"tau_frac", "0.1"});
    CHECK(entries[2] == ConfigEntry{"mode", "dpst"});

    CHECK_THROWS_AS(parse_config_text("just a line\n"), dpst::ConfigError);
    CHECK_THROWS_AS(parse_config_text("= 4\n"), dpst::ConfigError);
}

TEST_CASE("parse_config - file then overrides")
{
    const auto path = std::filesystem::temp_directory_path() / "dpst_test_config.cfg";
    {
        std::ofstream f(path);
        f << "isd = 50\ndrops = 200\nseed = 9\ntau_frac = 0.2\nserving_fading = rician\n";
    }
    const RunConfig from_file = parse_config(path, {});
    CHECK(from_file.isd_m == std::vector<double>{50.0});
    CHECK(from_file.n_drops == 200);
    CHECK(from_file.radio.serving_los_mode == dpst::channel::LosMode::RankOneLos);

    const RunConfig overridden = parse_config(path, {{"drops", "30"}, {"tau_frac", "0.3"}, {"drops", "40"}});
    CHECK(overridden.n_drops == 40);
    CHECK(overridden.pulse.tau_fraction == 0.3);
    CHECK(overridden.seed == 9);
    std::filesystem::remove(path);
}

TEST_CASE("config_hash - stable and sensitive")
{
    const RunConfig a = parse_config(std::nullopt, {});
    const RunConfig b = parse_config(std::nullopt, {{"out", "elsewhere"}, {"threads", "3"}});
    CHECK(config_hash(a) == config_hash(b));
    CHECK(config_hash(a).size() == 16);
    CHECK(config_hash(a) != config_hash(parse_config(std::nullopt, {{"seed", "2"}})));
    CHECK(config_hash(a) != config_hash(parse_config(std::nullopt, {{"tau_frac", "0.06"}})));
    CHECK(canonical_text(a) == canonical_text(b));
}

TEST_CASE("format_double round trips")
{
    for (double v : {0.05, 1.0 / 3.0, -12.5, 1e-300, 101670388.8377006})
        CHECK(std::stod(format_double(v)) == v);
    CHECK(format_double(20.0) == "20");
}
