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

#include "cfuav/scenario.hpp"

#include <cmath>
#include <string>

namespace cfuav
{

double distance(const Position &a, const Position &b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

void validate(const ScenarioConfig &c)
{
    auto require = [](bool ok, const std::string &msg)
    {
        if (!ok)
            throw ConfigError(msg);
    };
    require(c.L >= 1, "L must be at least 1");
    require(c.N >= 1, "N must be at least 1");
    require(std::isfinite(c.H) && c.H >= 0.0, "H must be finite and non-negative");
    require(c.area_side >= 0.0, "area_side must be non-negative");
    require(c.tau_p >= 1.0, "tau_p must be at least 1");
    require(c.tau_c > c.tau_p, "tau_c must exceed tau_p");
    require(c.rho >= 0.0 && c.rho <= 1.0, "rho must lie in [0, 1]");
    require(c.kappa >= 0.0 && c.kappa <= 1.0, "kappa must lie in [0, 1]");
    require(c.beta0 >= 0.0, "beta0 must be non-negative");
    require(c.sigma2 >= 0.0, "sigma2 must be non-negative");
    require(c.p_d_cf >= 0.0 && c.p_d_c >= 0.0, "downlink powers must be non-negative");
    require(!c.sc_power_scale || *c.sc_power_scale >= 0.0, "sc_power_scale must be non-negative");
    require(c.p0_pilot >= 0.0, "p0_pilot must be non-negative");
    require(c.d_min() > 0.0, "V_hor * T_block must be positive");
    require(c.M >= 2, "M must be at least 2");
    require(c.N_slot_max >= 1, "N_slot_max must be at least 1");
    require(c.d_H > 0.0 && c.d_H <= 0.5, "d_H must lie in (0, 0.5]");
    require(c.asd_deg >= 0.0, "asd_deg must be non-negative");
    require(c.n_clusters >= 1, "n_clusters must be at least 1");
    require(c.p_te >= 0.0 && c.p_te_u >= 0.0, "terrestrial user powers must be non-negative");
    require(c.se_mc_draws >= 1, "se_mc_draws must be at least 1");
}

Placement generate_placement(const ScenarioConfig &config, RandomStream &rng)
{
    const double side = config.area_side;
    auto draw = [&]() { return Position{rng.uniform(0.0, side), rng.uniform(0.0, side)}; };

    Placement p;
    p.ap_positions.reserve(static_cast<std::size_t>(config.L));
    for (int l = 0; l < config.L; ++l)
        p.ap_positions.push_back(draw());
    p.bs_position = config.bs();
    if (config.tue_enabled)
        p.tue_position = draw();
    p.uav_start = config.uav_start ? *config.uav_start : draw();
    p.uav_dest = config.uav_dest ? *config.uav_dest : draw();
    return p;
}

bool placement_inside_area(const Placement &placement, const ScenarioConfig &config)
{
    const double side = config.area_side;
    auto inside = [side](const Position &q)
    { return std::isfinite(q.x) && std::isfinite(q.y) && q.x >= 0.0 && q.x <= side && q.y >= 0.0 && q.y <= side; };

    for (const auto &q : placement.ap_positions)
        if (!inside(q))
            return false;
    if (placement.tue_position && !inside(*placement.tue_position))
        return false;
    return inside(placement.bs_position) && inside(placement.uav_start) && inside(placement.uav_dest);
}

Position step_uav(const Position &current, double heading_rad, const ScenarioConfig &config)
{
    if (!std::isfinite(heading_rad))
        throw std::invalid_argument("step_uav: heading must be finite");
    const double d = config.d_min();
    return {current.x + d * std::cos(heading_rad), current.y + d * std::sin(heading_rad)};
}

long slots_on_line(const Position &from, const Position &to, const ScenarioConfig &config)
{
    const double d_min = config.d_min();
    if (!(d_min > 0.0))
        throw ConfigError("slots_on_line: d_min must be positive");
    const double ratio = distance(from, to) / d_min;
    // Guard against 3.0000000000000004 style rounding of exact multiples.
    const double nearest = std::round(ratio);
    if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, nearest))
        return static_cast<long>(nearest);
    return static_cast<long>(std::ceil(ratio));
}

} // namespace cfuav
