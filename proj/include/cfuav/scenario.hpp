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

#ifndef CFUAV_SCENARIO_HPP
#define CFUAV_SCENARIO_HPP

#include "cfuav/random.hpp"
#include "cfuav/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cfuav
{

/// Horizontal position in meters. The UAV altitude lives in ScenarioConfig;
/// APs, BS and the terrestrial user sit at height 0.
struct Position
{
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position &, const Position &) = default;
};

double distance(const Position &a, const Position &b);

/// Which AP's terrestrial-user precoding pickup enters the small-cell
/// harvested energy.
enum class ScTueServingPolicy
{
    EnergyServing, // the UAV's energy-maximizing AP
    NearestToTue   // the AP with the strongest terrestrial-user link
};

/// Visiting order for the all-APs reference path.
enum class AllApsOrder
{
    GreedyNearest
};

/// All physical and protocol parameters. Powers and gains are linear, with
/// milliwatt as the single power unit.
struct ScenarioConfig
{
    int L = 20;               // access points
    int N = 2;                // antennas per AP
    double H = 20.0;          // UAV altitude [m]
    double area_side = 100.0; // square side [m]

    double tau_c = 200.0; // channel uses per coherence block
    double tau_p = 1.0;   // pilot channel uses
    double rho = 0.5;     // time-splitting fraction
    double kappa = 0.98;  // UAV hardware quality factor

    double beta0 = 1e-4;                    // reference gain at 1 m (-40 dB)
    double sigma2 = 2.5118864315095824e-10; // noise power (-96 dBm) [mW]
    double p_d_cf = 1000.0;                 // CF downlink power per AP (30 dBm) [mW]
    double p_d_c = 1000.0;                  // cellular BS downlink power [mW]
    std::optional<double> sc_power_scale;   // SC power multiplier, defaults to L
    double p0_pilot = 1.2589254117941673;   // initial pilot power (1 dBm) [mW]

    double V_hor = 20.0;    // UAV speed [m/s]
    double T_block = 2e-3;  // coherence block duration [s]
    int M = 10;             // angle-search candidates per slot
    int N_slot_max = 20000; // slot cap for trajectory planners

    double d_H = 0.5;                 // antenna spacing [wavelengths]
    double asd_deg = 10.0;            // angular standard deviation
    int n_clusters = 6;               // scattering clusters
    double cluster_spread_deg = 40.0; // cluster AoAs drawn within +-spread of the nominal AoA

    double p_te = 1.2589254117941673;   // terrestrial user pilot power [mW]
    double p_te_u = 1.2589254117941673; // terrestrial user data power [mW]
    bool tue_enabled = false;
    ScTueServingPolicy sc_tue_policy = ScTueServingPolicy::EnergyServing;

    int se_mc_draws = 10000; // realizations behind small-cell / cellular E{log2(1+SINR)}
    AllApsOrder all_aps_order = AllApsOrder::GreedyNearest;

    std::optional<Position> bs_position; // defaults to the square center
    std::optional<Position> uav_start;   // drawn uniformly when unset
    std::optional<Position> uav_dest;    // drawn uniformly when unset

    std::uint64_t rng_seed = 1;

    double tau_e() const { return rho * (tau_c - tau_p); }
    double d_min() const { return V_hor * T_block; }
    double p_d_sc() const { return sc_power_scale.value_or(static_cast<double>(L)) * p_d_cf; }
    double data_prelog() const { return (tau_c - tau_p - tau_e()) / tau_c; }
    Position bs() const { return bs_position.value_or(Position{area_side / 2.0, area_side / 2.0}); }
};

/// Throws ConfigError when an invariant of ScenarioConfig is violated.
void validate(const ScenarioConfig &config);

struct Placement
{
    std::vector<Position> ap_positions;
    Position bs_position;
    std::optional<Position> tue_position;
    Position uav_start;
    Position uav_dest;
};

/// APs i.i.d. uniform over the square, BS at the configured position (square
/// center by default), terrestrial user uniform when enabled, UAV endpoints
/// from the config or uniform. Draw order is fixed so the result is a pure
/// function of (config, rng state).
Placement generate_placement(const ScenarioConfig &config, RandomStream &rng);

/// True when every point lies inside the configured square.
bool placement_inside_area(const Placement &placement, const ScenarioConfig &config);

/// Position exactly d_min away from `current` along `heading_rad`.
Position step_uav(const Position &current, double heading_rad, const ScenarioConfig &config);

/// Smallest n with n * d_min >= |to - from|.
long slots_on_line(const Position &from, const Position &to, const ScenarioConfig &config);

} // namespace cfuav

#endif
