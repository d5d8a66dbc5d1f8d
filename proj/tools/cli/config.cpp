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

#include "cli/config.hpp"

#include "dpst/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace dpst::cli
{
namespace
{

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::string normalize_key(std::string_view key)
{
    std::string out = trim(key);
    for (char &c : out)
    {
        if (c == '-')
            c = '_';
        else
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::vector<std::string> split_list(const std::string &key, const std::string &value)
{
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (item.empty())
            throw ConfigError(key, "empty list element in '" + value + "'");
        items.push_back(item);
    }
    if (items.empty())
        throw ConfigError(key, "list must not be empty");
    return items;
}

double to_double(const std::string &key, const std::string &text)
{
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v))
        throw ConfigError(key, "expected a finite number, got '" + text + "'");
    return v;
}

std::uint64_t to_unsigned(const std::string &key, const std::string &text)
{
    const std::string t = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ConfigError(key, "expected a non-negative integer, got '" + text + "'");
    return v;
}

int to_int(const std::string &key, const std::string &text)
{
    const std::uint64_t v = to_unsigned(key, text);
    if (v > 1'000'000)
        throw ConfigError(key, "value " + text + " is too large");
    return static_cast<int>(v);
}

bool to_bool(const std::string &key, const std::string &text)
{
    const std::string t = normalize_key(text);
    if (t == "on" || t == "true" || t == "yes" || t == "1")
        return true;
    if (t == "off" || t == "false" || t == "no" || t == "0")
        return false;
    throw ConfigError(key, "expected on/off, got '" + text + "'");
}

channel::PathlossModel to_pathloss(const std::string &key, const std::string &text)
{
    const std::string t = normalize_key(text);
    if (t == "umi_los")
        return channel::PathlossModel::UrbanMicroLos;
    if (t == "umi_nlos")
        return channel::PathlossModel::UrbanMicroNlos;
    throw ConfigError(key, "expected umi_los or umi_nlos, got '" + text + "'");
}

std::string_view pathloss_name(channel::PathlossModel m)
{
    return m == channel::PathlossModel::UrbanMicroLos ? "umi_los" : "umi_nlos";
}

std::string_view los_mode_name(channel::LosMode m)
{
    return m == channel::LosMode::FullCorrelation ? "full_correlation" : "rician";
}

void require(bool ok, const char *key, const std::string &what)
{
    if (!ok)
        throw ConfigError(key, what);
}

std::string join(const std::vector<double> &values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + format_double(values[i]);
    return out;
}

} // namespace

std::string format_double(double value)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

void RunConfig::validate() const
{
    require(!isd_m.empty(), "isd", "at least one inter-site distance is required");
    for (double isd : isd_m)
        require(isd > 2.0 * network::kMinUeDistanceM, "isd",
                "inter-site distance must exceed " + format_double(2.0 * network::kMinUeDistanceM) + " m");
    require(!modes.empty(), "mode", "at least one channel mode is required");
    require(n_drops >= 1, "drops", "must be >= 1");

    pulse.validate();

    require(radio.carrier_ghz > 0.0, "carrier_ghz", "must be positive");
    require(radio.bandwidth_hz > 0.0, "bandwidth_hz", "must be positive");
    require(radio.shadowing_sigma_db >= 0.0, "shadowing_sigma_db", "must be non-negative");
    require(radio.nlos_correlation >= 0.0 && radio.nlos_correlation < 1.0, "nlos_correlation", "must lie in [0, 1)");

    require(!tau_grid.empty(), "tau_grid", "must not be empty");
    for (double t : tau_grid)
        require(t >= 0.0 && t < 1.0, "tau_grid", "values must lie in [0, 1), got " + format_double(t));
}

std::vector<ConfigEntry> parse_config_text(const std::string &text)
{
    std::vector<ConfigEntry> entries;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line))
    {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (trim(line).empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
        std::string key = normalize_key(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("", "line " + std::to_string(line_no) + ": missing key");
        entries.emplace_back(std::move(key), trim(line.substr(eq + 1)));
    }
    return entries;
}

void apply_entry(RunConfig &c, const std::string &raw_key, const std::string &value)
{
    const std::string key = normalize_key(raw_key);
    if (key == "isd")
    {
        c.isd_m.clear();
        for (const auto &item : split_list(key, value))
            c.isd_m.push_back(to_double(key, item));
    }
    else if (key == "mode")
    {
        c.modes.clear();
        for (const auto &item : split_list(key, value))
        {
            const auto mode = link::parse_channel_mode(normalize_key(item));
            if (!mode)
                throw ConfigError(key, "unknown channel mode '" + item + "' (expected los, dpst or ideal)");
            if (std::find(c.modes.begin(), c.modes.end(), *mode) == c.modes.end())
                c.modes.push_back(*mode);
        }
    }
    else if (key == "drops")
        c.n_drops = to_unsigned(key, value);
    else if (key == "seed")
        c.seed = to_unsigned(key, value);
    else if (key == "tau_frac")
        c.pulse.tau_fraction = to_double(key, value);
    else if (key == "tx_os")
        c.pulse.tx_oversampling = to_int(key, value);
    else if (key == "rx_os")
        c.pulse.rx_oversampling = to_int(key, value);
    else if (key == "block_symbols")
        c.pulse.block_symbols = to_int(key, value);
    else if (key == "carrier_ghz")
        c.radio.carrier_ghz = to_double(key, value);
    else if (key == "bandwidth_hz")
        c.radio.bandwidth_hz = to_double(key, value);
    else if (key == "p_bs_dbm")
        c.radio.p_bs_dbm = to_double(key, value);
    else if (key == "noise_figure_db")
        c.radio.noise_figure_db = to_double(key, value);
    else if (key == "shadowing_sigma_db")
        c.radio.shadowing_sigma_db = to_double(key, value);
    else if (key == "antenna_gain_dbi")
        c.radio.antenna_gain_dbi = to_double(key, value);
    else if (key == "nlos_correlation")
        c.radio.nlos_correlation = to_double(key, value);
    else if (key == "serving_fading")
    {
        const std::string v = normalize_key(value);
        if (v == "full_correlation")
            c.radio.serving_los_mode = channel::LosMode::FullCorrelation;
        else if (v == "rician")
            c.radio.serving_los_mode = channel::LosMode::RankOneLos;
        else
            throw ConfigError(key, "expected full_correlation or rician, got '" + value + "'");
    }
    else if (key == "serving_pathloss")
        c.radio.serving_pathloss = to_pathloss(key, value);
    else if (key == "interferer_pathloss")
        c.radio.interferer_pathloss = to_pathloss(key, value);
    else if (key == "interference")
        c.radio.interference = to_bool(key, value);
    else if (key == "out")
    {
        const std::string v = trim(value);
        if (v.empty())
            throw ConfigError(key, "output directory must not be empty");
        c.output_dir = v;
    }
    else if (key == "threads")
        c.threads = static_cast<unsigned>(to_int(key, value));
    else if (key == "tau_grid")
    {
        c.tau_grid.clear();
        for (const auto &item : split_list(key, value))
            c.tau_grid.push_back(to_double(key, item));
    }
    else
        throw ConfigError(key, "unknown configuration key");
}

RunConfig parse_config(const std::optional<std::filesystem::path> &file, const std::vector<ConfigEntry> &overrides)
{
    RunConfig config;
    if (file)
    {
        std::ifstream in(*file);
        if (!in)
            throw ConfigError("config", "cannot read '" + file->string() + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        for (const auto &[key, value] : parse_config_text(buffer.str()))
            apply_entry(config, key, value);
    }
    for (const auto &[key, value] : overrides)
        apply_entry(config, key, value);
    config.validate();
    return config;
}

std::string canonical_text(const RunConfig &c)
{
    std::string modes;
    for (std::size_t i = 0; i < c.modes.size(); ++i)
        modes += (i ? "," : "") + std::string(link::to_string(c.modes[i]));

    std::ostringstream out;
    out << "isd=" << join(c.isd_m) << '\n'
        << "mode=" << modes << '\n'
        << "drops=" << c.n_drops << '\n'
        << "seed=" << c.seed << '\n'
        << "tau_frac=" << format_double(c.pulse.tau_fraction) << '\n'
        << "tx_os=" << c.pulse.tx_oversampling << '\n'
        << "rx_os=" << c.pulse.rx_oversampling << '\n'
        << "block_symbols=" << c.pulse.block_symbols << '\n'
        << "carrier_ghz=" << format_double(c.radio.carrier_ghz) << '\n'
        << "bandwidth_hz=" << format_double(c.radio.bandwidth_hz) << '\n'
        << "p_bs_dbm=" << format_double(c.radio.p_bs_dbm) << '\n'
        << "noise_figure_db=" << format_double(c.radio.noise_figure_db) << '\n'
        << "shadowing_sigma_db=" << format_double(c.radio.shadowing_sigma_db) << '\n'
        << "antenna_gain_dbi=" << format_double(c.radio.antenna_gain_dbi) << '\n'
        << "nlos_correlation=" << format_double(c.radio.nlos_correlation) << '\n'
        << "serving_fading=" << los_mode_name(c.radio.serving_los_mode) << '\n'
        << "serving_pathloss=" << pathloss_name(c.radio.serving_pathloss) << '\n'
        << "interferer_pathloss=" << pathloss_name(c.radio.interferer_pathloss) << '\n'
        << "interference=" << (c.radio.interference ? "on" : "off") << '\n'
        << "tau_grid=" << join(c.tau_grid) << '\n';
    return out.str();
}

std::string config_hash(const RunConfig &config)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical_text(config))
    {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace dpst::cli
