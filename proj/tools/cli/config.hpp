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

#ifndef DPST_CLI_CONFIG_HPP
#define DPST_CLI_CONFIG_HPP

#include "dpst/link.hpp"
#include "dpst/network.hpp"
#include "dpst/pulse.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dpst::cli
{

struct RunConfig
{
    std::vector<double> isd_m{20.0, 50.0, 150.0};
    std::vector<link::ChannelMode> modes{link::ChannelMode::CorrelatedLos, link::ChannelMode::Dpst,
                                         link::ChannelMode::Ideal};
    std::size_t n_drops = 10000;
    std::uint64_t seed = 1;
    pulse::PulseConfig pulse;
    network::RadioParams radio;
    std::filesystem::path output_dir = "dpst_out";
    unsigned threads = 0; // 0: hardware concurrency
    std::vector<double> tau_grid{0.0,  0.05, 0.1,  0.15, 0.2,  0.25, 0.3,  0.35, 0.4,  0.45,
                                 0.5,  0.55, 0.6,  0.65, 0.7,  0.75, 0.8,  0.85, 0.9,  0.95};

    // Throws ConfigError naming the first offending key.
    void validate() const;
};

using ConfigEntry = std::pair<std::string, std::string>;

// Flat "key = value" text; '#' starts a comment. Keys are returned normalized
// (lower case, '-' replaced by '_'). Throws ConfigError on malformed lines.
std::vector<ConfigEntry> parse_config_text(const std::string &text);

// Applies one entry. Unknown keys and unparsable or out-of-range values throw ConfigError.
void apply_entry(RunConfig &config, const std::string &key, const std::string &value);

// Defaults, then the file (if any), then the overrides in order; validated.
RunConfig parse_config(const std::optional<std::filesystem::path> &file, const std::vector<ConfigEntry> &overrides);

// key = value lines covering every setting that affects simulation output.
// Output directory and thread count are excluded.
std::string canonical_text(const RunConfig &config);

// 16 hex digit FNV-1a hash of canonical_text().
std::string config_hash(const RunConfig &config);

// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

} // namespace dpst::cli

#endif
