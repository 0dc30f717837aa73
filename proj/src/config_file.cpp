// SPDX-License-Identifier: Apache-2.0
//
// cfuav - link-level simulator for WPT-aided UAV uplinks over cell-free,
// small-cell and cellular massive MIMO
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

#include "cfuav/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace cfuav
{

namespace
{

std::string trim(const std::string &s)
{
    auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
    return b < e ? std::string(b, e) : std::string();
}

double to_double(const std::string &key, const std::string &value)
{
    try
    {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return v;
    }
    catch (const std::exception &)
    {
        throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
    }
}

int to_int(const std::string &key, const std::string &value)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw ConfigError("config key '" + key + "': expected an integer, got '" + value + "'");
    return v;
}

bool to_bool(const std::string &key, const std::string &value)
{
    std::string v = value;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "1" || v == "yes" || v == "on")
        return true;
    if (v == "false" || v == "0" || v == "no" || v == "off")
        return false;
    throw ConfigError("config key '" + key + "': expected a boolean, got '" + value + "'");
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string &text)
{
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

void apply_config_key(ScenarioConfig &c, const std::string &key, const std::string &value)
{
    auto num = [&]() { return to_double(key, value); };
    auto integer = [&]() { return to_int(key, value); };
    auto pos_x = [&](std::optional<Position> &p, double v)
    {
        Position q = p.value_or(Position{});
        q.x = v;
        p = q;
    };
    auto pos_y = [&](std::optional<Position> &p, double v)
    {
        Position q = p.value_or(Position{});
        q.y = v;
        p = q;
    };

    if (key == "L") c.L = integer();
    else if (key == "N") c.N = integer();
    else if (key == "H") c.H = num();
    else if (key == "area_side") c.area_side = num();
    else if (key == "tau_c") c.tau_c = num();
    else if (key == "tau_p") c.tau_p = num();
    else if (key == "rho") c.rho = num();
    else if (key == "kappa") c.kappa = num();
    else if (key == "beta0") c.beta0 = num();
    else if (key == "beta0_db") c.beta0 = db_to_linear(num());
    else if (key == "sigma2") c.sigma2 = num();
    else if (key == "sigma2_dbm") c.sigma2 = db_to_linear(num());
    else if (key == "p_d_cf") c.p_d_cf = num();
    else if (key == "p_d_cf_dbm") c.p_d_cf = db_to_linear(num());
    else if (key == "p_d_c") c.p_d_c = num();
    else if (key == "p_d_c_dbm") c.p_d_c = db_to_linear(num());
    else if (key == "sc_power_scale") c.sc_power_scale = num();
    else if (key == "p0_pilot") c.p0_pilot = num();
    else if (key == "p0_pilot_dbm") c.p0_pilot = db_to_linear(num());
    else if (key == "V_hor") c.V_hor = num();
    else if (key == "T_block") c.T_block = num();
    else if (key == "M") c.M = integer();
    else if (key == "N_slot_max") c.N_slot_max = integer();
    else if (key == "d_H") c.d_H = num();
    else if (key == "asd_deg") c.asd_deg = num();
    else if (key == "n_clusters") c.n_clusters = integer();
    else if (key == "cluster_spread_deg") c.cluster_spread_deg = num();
    else if (key == "p_te") c.p_te = num();
    else if (key == "p_te_dbm") c.p_te = db_to_linear(num());
    else if (key == "p_te_u") c.p_te_u = num();
    else if (key == "p_te_u_dbm") c.p_te_u = db_to_linear(num());
    else if (key == "tue_enabled") c.tue_enabled = to_bool(key, value);
    else if (key == "sc_tue_policy")
    {
        if (value == "energy-serving")
            c.sc_tue_policy = ScTueServingPolicy::EnergyServing;
        else if (value == "nearest-to-tue")
            c.sc_tue_policy = ScTueServingPolicy::NearestToTue;
        else
            throw ConfigError("config key 'sc_tue_policy': expected energy-serving or nearest-to-tue");
    }
    else if (key == "se_mc_draws") c.se_mc_draws = integer();
    else if (key == "bs_x") pos_x(c.bs_position, num());
    else if (key == "bs_y") pos_y(c.bs_position, num());
    else if (key == "start_x") pos_x(c.uav_start, num());
    else if (key == "start_y") pos_y(c.uav_start, num());
    else if (key == "dest_x") pos_x(c.uav_dest, num());
    else if (key == "dest_y") pos_y(c.uav_dest, num());
    else if (key == "rng_seed")
    {
        try
        {
            std::size_t used = 0;
            c.rng_seed = std::stoull(value, &used);
            if (used != value.size())
                throw std::invalid_argument(value);
        }
        catch (const std::exception &)
        {
            throw ConfigError("config key 'rng_seed': expected an unsigned integer, got '" + value + "'");
        }
    }
    else
        throw ConfigError("unknown config key '" + key + "'");
}

ScenarioConfig load_config_file(const std::string &path, ScenarioConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try
    {
        for (const auto &[k, v] : parse_config_text(buf.str()))
            apply_config_key(base, k, v);
    }
    catch (const ConfigError &e)
    {
        throw ConfigError(path + ": " + e.what());
    }
    validate(base);
    return base;
}

std::map<std::string, std::string> config_echo(const ScenarioConfig &c)
{
    std::map<std::string, std::string> m;
    m["L"] = std::to_string(c.L);
    m["N"] = std::to_string(c.N);
    m["H"] = fmt(c.H);
    m["area_side"] = fmt(c.area_side);
    m["tau_c"] = fmt(c.tau_c);
    m["tau_p"] = fmt(c.tau_p);
    m["rho"] = fmt(c.rho);
    m["kappa"] = fmt(c.kappa);
    m["beta0"] = fmt(c.beta0);
    m["sigma2"] = fmt(c.sigma2);
    m["p_d_cf"] = fmt(c.p_d_cf);
    m["p_d_c"] = fmt(c.p_d_c);
    m["sc_power_scale"] = fmt(c.sc_power_scale.value_or(static_cast<double>(c.L)));
    m["p0_pilot"] = fmt(c.p0_pilot);
    m["V_hor"] = fmt(c.V_hor);
    m["T_block"] = fmt(c.T_block);
    m["M"] = std::to_string(c.M);
    m["N_slot_max"] = std::to_string(c.N_slot_max);
    m["d_H"] = fmt(c.d_H);
    m["asd_deg"] = fmt(c.asd_deg);
    m["n_clusters"] = std::to_string(c.n_clusters);
    m["cluster_spread_deg"] = fmt(c.cluster_spread_deg);
    m["p_te"] = fmt(c.p_te);
    m["p_te_u"] = fmt(c.p_te_u);
    m["tue_enabled"] = c.tue_enabled ? "true" : "false";
    m["sc_tue_policy"] = c.sc_tue_policy == ScTueServingPolicy::EnergyServing ? "energy-serving" : "nearest-to-tue";
    m["se_mc_draws"] = std::to_string(c.se_mc_draws);
    const Position bs = c.bs();
    m["bs_x"] = fmt(bs.x);
    m["bs_y"] = fmt(bs.y);
    if (c.uav_start)
    {
        m["start_x"] = fmt(c.uav_start->x);
        m["start_y"] = fmt(c.uav_start->y);
    }
    if (c.uav_dest)
    {
        m["dest_x"] = fmt(c.uav_dest->x);
        m["dest_y"] = fmt(c.uav_dest->y);
    }
    m["rng_seed"] = std::to_string(c.rng_seed);
    return m;
}

} // namespace cfuav
