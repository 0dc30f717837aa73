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

#include "cfuav/trajectory.hpp"

#include "cfuav/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cfuav
{

SeObjective make_objective(const SystemModel &model, Architecture arch)
{
    return [&model, arch](const Position &uav, long, double pilot)
    {
        const auto s = evaluate_slot(model, arch, uav, pilot, SeMethod::ClosedForm);
        return SlotEvaluation{s.se, s.energy};
    };
}

double TrajectoryLog::average_se() const
{
    if (se.empty())
        return 0.0;
    double sum = 0.0;
    for (double v : se)
        sum += v;
    return sum / static_cast<double>(se.size());
}

namespace
{

// Slot bookkeeping shared by the planners.
class Flight
{
public:
    Flight(const Position &start, const SeObjective &objective, const ScenarioConfig &config)
        : objective_(objective), config_(config)
    {
        log_.start = start;
        log_.start_slot = objective_(start, 0, config.p0_pilot);
        pilot_ = log_.start_slot.energy.p_pilot_next;
        current_ = start;
    }

    const Position &current() const { return current_; }
    double pilot() const { return pilot_; }
    long slot() const { return log_.slots_used + 1; }
    bool capped() const { return log_.slots_used >= config_.N_slot_max; }
    TrajectoryLog &log() { return log_; }

    void move(const Position &p, const SlotEvaluation &e)
    {
        current_ = p;
        log_.positions.push_back(p);
        log_.se.push_back(e.se);
        log_.p_he.push_back(e.energy.p_he);
        log_.p_u.push_back(e.energy.p_u);
        pilot_ = e.energy.p_pilot_next;
        ++log_.slots_used;
    }

    void move(const Position &p) { move(p, objective_(p, slot(), pilot_)); }

private:
    const SeObjective &objective_;
    const ScenarioConfig &config_;
    TrajectoryLog log_;
    Position current_;
    double pilot_ = 0.0;
};

bool within_step(const Position &a, const Position &b, const ScenarioConfig &c)
{
    return distance(a, b) <= c.d_min() * (1.0 + 1e-9);
}

double bearing(const Position &from, const Position &to) { return std::atan2(to.y - from.y, to.x - from.x); }

// Smallest absolute difference between two angles.
double angle_gap(double a, double b)
{
    double d = std::fmod(std::abs(a - b), 2.0 * pi);
    return d > pi ? 2.0 * pi - d : d;
}

// Lower edge of the closed quadrant of `to` as seen from `from`.
double quadrant_start(const Position &from, const Position &to)
{
    const bool east = to.x - from.x >= 0.0;
    const bool north = to.y - from.y >= 0.0;
    if (east && north)
        return 0.0;
    if (!east && north)
        return 0.5 * pi;
    if (!east && !north)
        return pi;
    return 1.5 * pi;
}

bool in_quadrant(const Position &from, const Position &dest, const Position &node)
{
    const bool east = dest.x - from.x >= 0.0;
    const bool north = dest.y - from.y >= 0.0;
    return (east ? node.x >= from.x : node.x <= from.x) && (north ? node.y >= from.y : node.y <= from.y);
}

// Steps toward `target`, landing on it when it is within d_min.
Position toward(const Position &cur, const Position &target, const ScenarioConfig &c)
{
    if (within_step(cur, target, c))
        return target;
    return step_uav(cur, bearing(cur, target), c);
}

// Marks APs within d_min of `p` as visited; returns how many were new.
int mark_visits(const Position &p, const std::vector<Position> &aps, std::vector<bool> &visited, TrajectoryLog &log,
                const ScenarioConfig &c)
{
    int n = 0;
    for (std::size_t l = 0; l < aps.size(); ++l)
        if (!visited[l] && within_step(p, aps[l], c))
        {
            visited[l] = true;
            log.visited_aps.push_back(static_cast<int>(l));
            ++n;
        }
    return n;
}

} // namespace

TrajectoryLog plan_line_path(const Position &start, const Position &dest, const SeObjective &objective,
                             const ScenarioConfig &config)
{
    Flight f(start, objective, config);
    f.log().direction_switches = 1;
    f.log().direction_searches = 1;
    if (start == dest)
    {
        f.log().arrived = true;
        return f.log();
    }
    const long total = slots_on_line(start, dest, config);
    const double d = config.d_min();
    const double ux = (dest.x - start.x) / distance(start, dest);
    const double uy = (dest.y - start.y) / distance(start, dest);
    for (long n = 1; n <= total && !f.capped(); ++n)
    {
        const Position p = n == total ? dest : Position{start.x + n * d * ux, start.y + n * d * uy};
        f.move(p);
    }
    f.log().arrived = f.current() == dest;
    return f.log();
}

TrajectoryLog plan_angle_search(const Position &start, const Position &dest, const SeObjective &objective,
                                const ScenarioConfig &config)
{
    if (config.M < 2)
        throw ConfigError("angle search needs M >= 2");
    Flight f(start, objective, config);
    const double spacing = 0.5 * pi / (config.M - 1);
    double heading = std::numeric_limits<double>::quiet_NaN();
    auto turn = [&](double h)
    {
        if (!(angle_gap(h, heading) <= 1e-12))
            ++f.log().direction_switches;
        heading = h;
    };

    while (!(f.current() == dest) && !f.capped())
    {
        const Position cur = f.current();
        f.log().direction_searches += config.M;
        if (within_step(cur, dest, config))
        {
            turn(bearing(cur, dest));
            f.move(dest);
            break;
        }
        const double to_dest = bearing(cur, dest);
        const double base = quadrant_start(cur, dest);
        const double remaining = distance(cur, dest);
        int best = -1;
        double best_se = -1.0, best_gap = 0.0;
        SlotEvaluation best_eval;
        Position best_pos;
        for (int k = 0; k < config.M; ++k)
        {
            const double h = base + k * spacing;
            const Position p = step_uav(cur, h, config);
            // Moves that do not approach dest are tabu.
            if (!(distance(p, dest) < remaining))
                continue;
            const SlotEvaluation e = objective(p, f.slot(), f.pilot());
            const double gap = angle_gap(h, to_dest);
            const double tol = 1e-12 * std::max(std::abs(e.se), std::abs(best_se));
            const bool better = e.se > best_se + tol || (std::abs(e.se - best_se) <= tol && gap < best_gap);
            if (best < 0 || better)
            {
                best = k;
                best_se = e.se;
                best_gap = gap;
                best_eval = e;
                best_pos = p;
            }
        }
        if (best < 0)
        {
            turn(to_dest);
            f.move(step_uav(cur, to_dest, config));
            continue;
        }
        turn(base + best * spacing);
        f.move(best_pos, best_eval);
    }
    f.log().arrived = f.current() == dest;
    return f.log();
}

TrajectoryLog plan_ap_search(const Position &start, const Position &dest, const std::vector<Position> &aps,
                             const SeObjective &objective, const ScenarioConfig &config)
{
    Flight f(start, objective, config);
    std::vector<bool> visited(aps.size(), false);
    mark_visits(start, aps, visited, f.log(), config);

    auto select = [&]() -> Position
    {
        const Position cur = f.current();
        Position target = dest;
        double best = distance(cur, dest);
        long examined = 1;
        for (std::size_t l = 0; l < aps.size(); ++l)
        {
            if (visited[l] || !in_quadrant(cur, dest, aps[l]))
                continue;
            ++examined;
            const double d = distance(cur, aps[l]);
            if (d < best)
            {
                best = d;
                target = aps[l];
            }
        }
        ++f.log().direction_switches;
        f.log().direction_searches += examined;
        return target;
    };

    Position target = select();
    while (!(f.current() == dest) && !f.capped())
    {
        // A target AP within d_min is already visited, so only dest is landed on.
        const Position p = toward(f.current(), target, config);
        f.move(p);
        if (mark_visits(p, aps, visited, f.log(), config) > 0 && !(p == dest))
            target = select();
    }
    f.log().arrived = f.current() == dest;
    return f.log();
}

TrajectoryLog plan_all_aps(const Position &start, const std::vector<Position> &aps, const SeObjective &objective,
                           const ScenarioConfig &config)
{
    if (aps.empty())
        throw ConfigError("all-APs path needs at least one AP");
    Flight f(start, objective, config);
    std::vector<bool> visited(aps.size(), false);
    mark_visits(start, aps, visited, f.log(), config);

    auto select = [&]() -> std::ptrdiff_t
    {
        std::ptrdiff_t pick = -1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t l = 0; l < aps.size(); ++l)
            if (!visited[l] && distance(f.current(), aps[l]) < best)
            {
                best = distance(f.current(), aps[l]);
                pick = static_cast<std::ptrdiff_t>(l);
            }
        if (pick >= 0)
        {
            ++f.log().direction_switches;
            ++f.log().direction_searches;
        }
        return pick;
    };

    std::ptrdiff_t target = select();
    while (target >= 0 && !f.capped())
    {
        const Position &t = aps[static_cast<std::size_t>(target)];
        f.move(toward(f.current(), t, config));
        mark_visits(f.current(), aps, visited, f.log(), config);
        if (visited[static_cast<std::size_t>(target)])
        {
            const bool last = std::find(visited.begin(), visited.end(), false) == visited.end();
            if (last && !(f.current() == t) && !f.capped())
                f.move(t);
            target = select();
        }
    }
    f.log().arrived = target < 0;
    return f.log();
}

void write_trajectory_csv(std::ostream &out, const TrajectoryLog &log)
{
    out << "slot,x,y,se,p_he,p_u\n";
    out << 0 << ',' << format_real(log.start.x) << ',' << format_real(log.start.y) << ','
        << format_real(log.start_slot.se) << ',' << format_real(log.start_slot.energy.p_he) << ','
        << format_real(log.start_slot.energy.p_u) << '\n';
    for (std::size_t n = 0; n < log.positions.size(); ++n)
        out << n + 1 << ',' << format_real(log.positions[n].x) << ',' << format_real(log.positions[n].y) << ','
            << format_real(log.se[n]) << ',' << format_real(log.p_he[n]) << ',' << format_real(log.p_u[n]) << '\n';
}

} // namespace cfuav
