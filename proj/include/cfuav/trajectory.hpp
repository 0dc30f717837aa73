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

#ifndef CFUAV_TRAJECTORY_HPP
#define CFUAV_TRAJECTORY_HPP

#include "cfuav/scenario.hpp"
#include "cfuav/system_model.hpp"

#include <functional>
#include <ostream>
#include <vector>

namespace cfuav
{

/// SE and energy split of one slot at a candidate position.
struct SlotEvaluation
{
    double se = 0.0;
    SlotEnergyState energy;
};

/// Per-slot objective: (position, slot index, pilot power carried from the
/// previous slot) -> SE and energy state. Must be deterministic.
using SeObjective = std::function<SlotEvaluation(const Position &, long, double)>;

/// Closed-form objective of one architecture. The model is held by reference.
SeObjective make_objective(const SystemModel &model, Architecture arch);

struct TrajectoryLog
{
    Position start;
    SlotEvaluation start_slot; // slot 0 at the start position with p0_pilot
    std::vector<Position> positions; // slots 1..slots_used
    std::vector<double> se;
    std::vector<double> p_he;
    std::vector<double> p_u;
    long direction_switches = 0;
    long direction_searches = 0;
    long slots_used = 0;
    bool arrived = false;
    std::vector<int> visited_aps; // in visiting order (AP search, all-APs)

    double average_se() const;
};

/// Greedy angle search: each slot evaluates M headings spread evenly over the
/// closed 90 degree quadrant that contains dest, spacing 90/(M - 1) degrees,
/// and moves d_min along the best one. Headings that do not reduce the
/// distance to dest are tabu. Ties go to the heading closest to the bearing
/// of dest. Within d_min of dest the last step lands on dest.
TrajectoryLog plan_angle_search(const Position &start, const Position &dest, const SeObjective &objective,
                                const ScenarioConfig &config);

/// AP search: flies straight to the nearest direction node (unvisited AP or
/// dest) inside the quadrant of dest. An AP within d_min of a trajectory
/// point is visited and triggers a new selection. Candidate nodes examined
/// are counted as searches.
TrajectoryLog plan_ap_search(const Position &start, const Position &dest, const std::vector<Position> &aps,
                             const SeObjective &objective, const ScenarioConfig &config);

/// Straight flight to dest at d_min per slot.
TrajectoryLog plan_line_path(const Position &start, const Position &dest, const SeObjective &objective,
                             const ScenarioConfig &config);

/// Visits every AP in greedy nearest-unvisited order and ignores dest. An AP
/// within d_min of a trajectory point is visited; the flight ends on the
/// last AP.
TrajectoryLog plan_all_aps(const Position &start, const std::vector<Position> &aps, const SeObjective &objective,
                           const ScenarioConfig &config);

/// CSV with header `slot,x,y,se,p_he,p_u`; row 0 is the start position.
void write_trajectory_csv(std::ostream &out, const TrajectoryLog &log);

} // namespace cfuav

#endif
