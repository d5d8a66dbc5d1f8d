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

#ifndef DPST_CLI_COMMANDS_HPP
#define DPST_CLI_COMMANDS_HPP

#include "cli/config.hpp"

#include "dpst/errors.hpp"
#include "dpst/network.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dpst::cli
{

// Output directory or file could not be written or read.
class IoError : public Error
{
public:
    using Error::Error;
};

struct CampaignOutcome
{
    network::CampaignResult result;
    std::vector<std::filesystem::path> files;
};

// Runs the configured campaign and writes sinr_cdf_<isd>_<mode>.csv, tput_cdf_<isd>_<mode>.csv
// and summary.json into config.output_dir.
CampaignOutcome cmd_campaign(const RunConfig &config);

struct ConditioningRow
{
    std::string channel; // "los", "dpst", "ideal"
    std::size_t rank = 0;
    double condition_number = 0.0;
};

// Rank and condition number of the fully correlated 2x2 LOS channel, its DPST virtual
// channel under `pulse`, and the ideal channel.
std::vector<ConditioningRow> conditioning_table(const pulse::PulseConfig &pulse);

// Prints the table to `out` and writes conditioning.json into config.output_dir.
std::vector<ConditioningRow> cmd_conditioning(const RunConfig &config, std::ostream &out);

struct TauSweepRow
{
    double tau_fraction = 0.0;
    double condition_number = 0.0;      // of H_N for the fully correlated channel
    double median_effective_sinr_db = 0.0; // DPST mode at the first configured ISD
};

// Evaluates every point of config.tau_grid and writes tau_sweep.csv into config.output_dir.
std::vector<TauSweepRow> cmd_tau_sweep(const RunConfig &config);

// CDF file with one row per sorted sample.
void write_cdf_csv(const std::filesystem::path &path, const network::CdfSummary &cdf, const std::string &hash);

struct CdfFile
{
    std::string header_comment; // first line without the leading "# "
    std::vector<double> values;
    std::vector<double> cumulative_probability;
};

CdfFile read_cdf_csv(const std::filesystem::path &path);

std::string cdf_file_name(const char *prefix, double isd_m, link::ChannelMode mode);

} // namespace dpst::cli

#endif
