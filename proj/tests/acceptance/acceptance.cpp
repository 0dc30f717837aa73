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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "cfuav/energy.hpp"
#include "cfuav/estimation.hpp"
#include "cfuav/experiments.hpp"
#include "cfuav/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace cfuav;

namespace
{

constexpr int kThreads = 0; // all cores

struct Verdict
{
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok)
        {
            pass = false;
            detail << " [failed: " << what << ']';
        }
    }
};

int failures = 0;

void report(const std::string &name, Verdict &v, std::chrono::steady_clock::time_point t0)
{
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ":" << v.detail.str() << " (" << s << " s)" << std::endl;
    failures += v.pass ? 0 : 1;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

bool in_band(double x, double lo, double hi) { return x >= lo && x <= hi; }

// ------------------------------------------------------------------------

void closed_form_validation()
{
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    ValidationOptions o;
    o.realizations = 100000;
    o.threads = kThreads;
    const auto reports = run_validation(ScenarioConfig{}, o);
    double worst = 0.0;
    std::string worst_name;
    for (const auto &r : reports)
    {
        v.require(r.pass, r.quantity + " rel_error=" + std::to_string(r.rel_error));
        if (r.rel_error > worst)
        {
            worst = r.rel_error;
            worst_name = r.quantity;
        }
    }
    v.detail << " " << reports.size() << " reports at " << o.realizations << " realizations, worst " << worst_name
             << " rel_error=" << worst;
    report("closed-form validation", v, t0);
}

void algebraic_identities()
{
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    RandomStream rng({2024, 1});

    // Power split: next pilot power equals the uplink data power.
    double worst_split = 0.0;
    for (int i = 0; i < 1000; ++i)
    {
        ScenarioConfig c;
        c.L = 1 + static_cast<int>(rng.uniform(0.0, 20.0));
        c.N = 1 + static_cast<int>(rng.uniform(0.0, 4.0));
        c.H = rng.uniform(5.0, 60.0);
        c.tau_c = std::round(rng.uniform(20.0, 400.0));
        c.tau_p = 1.0;
        c.rho = rng.uniform(0.01, 0.99);
        c.kappa = rng.uniform(0.5, 1.0);
        const auto m = SystemModel::random(c, rng);
        const Position u{rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
        for (auto a : {Architecture::Cf, Architecture::SmallCell, Architecture::Cellular})
        {
            const auto e = evaluate_energy(m, a, u, c.p0_pilot);
            const double rel = std::abs(e.p_u - e.p_pilot_next) / std::max(e.p_u, 1e-300);
            worst_split = std::max(worst_split, rel);
        }
    }
    v.require(worst_split <= 1e-12, "p_u == p[n+1]");

    // LSFD with one AP and no terrestrial user equals the matched-filter SINR.
    double worst_lsfd = 0.0;
    for (int i = 0; i < 1000; ++i)
    {
        ScenarioConfig c;
        c.L = 1;
        c.N = 1 + static_cast<int>(rng.uniform(0.0, 4.0));
        c.kappa = rng.uniform(0.5, 1.0);
        const auto m = SystemModel::random(c, rng);
        const Position u{rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
        const double p = std::exp(rng.uniform(-8.0, 1.0));
        const double p_u = std::exp(rng.uniform(-8.0, 1.0));
        const auto l = m.ap_links(u)[0];
        const std::vector<LinkMoments> mom = {link_moments(l.h_bar, l.R, estimation_matrices(l, p, c.kappa, c.sigma2))};
        const double mf = se_cf_closed_form(mom, p_u, c.kappa, c.sigma2, c.data_prelog()).sinr;
        const double ls = lsfd_sinr(lsfd_vectors(mom), p_u, c.p_te_u, c.kappa, c.sigma2);
        worst_lsfd = std::max(worst_lsfd, std::abs(ls - mf) / mf);
    }
    v.require(worst_lsfd <= 1e-10, "LSFD(L=1) == matched filter");

    // A disabled terrestrial user leaves every output bit-identical to the
    // TUE-free formulas, whatever its power settings.
    long compared = 0;
    bool bitwise = true;
    for (int i = 0; i < 100; ++i)
    {
        ScenarioConfig c;
        c.se_mc_draws = 100;
        ScenarioConfig c2 = c;
        c2.p_te = 50.0;
        c2.p_te_u = 75.0;
        const std::uint64_t key = 7000 + static_cast<std::uint64_t>(i);
        RandomStream r1({key}), r2({key});
        const auto m1 = SystemModel::random(c, r1);
        const auto m2 = SystemModel::random(c2, r2);
        const Position u{rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
        for (auto a : {Architecture::Cf, Architecture::CfLsfd, Architecture::SmallCell, Architecture::Cellular})
        {
            RandomStream s1({key, 1}), s2({key, 1});
            const auto o1 = evaluate_slot(m1, a, u, c.p0_pilot, SeMethod::MonteCarlo, &s1);
            const auto o2 = evaluate_slot(m2, a, u, c.p0_pilot, SeMethod::MonteCarlo, &s2);
            bitwise = bitwise && same_bits(o1.se, o2.se) && same_bits(o1.energy.p_he, o2.energy.p_he);
            compared += 2;
        }
        const auto links = m1.ap_links(u);
        std::vector<LinkMoments> mom;
        for (const auto &l : links)
            mom.push_back(link_moments(l.h_bar, l.R, estimation_matrices(l, c.p0_pilot, c.kappa, c.sigma2)));
        const auto cf = evaluate_slot(m1, Architecture::Cf, u, c.p0_pilot);
        const double he = he_cf(mom, c.p_d_cf, c.kappa, c.tau_e(), c.tau_c);
        const double se = se_cf_closed_form(mom, cf.energy.p_u, c.kappa, c.sigma2, c.data_prelog()).se;
        bitwise = bitwise && same_bits(cf.energy.p_he, he) && same_bits(cf.se, se);
        compared += 2;
    }
    v.require(bitwise, "TUE-disabled == TUE-free bitwise");
    v.detail << " split max rel " << worst_split << ", LSFD(L=1) max rel " << worst_lsfd << ", " << compared
             << " bitwise comparisons " << (bitwise ? "identical" : "differ");
    report("algebraic identities", v, t0);
}

void architecture_se_ordering()
{
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    ScenarioConfig c;
    c.se_mc_draws = 1000;
    RunOptions o;
    o.realizations = 5000;
    o.threads = kThreads;
    const auto r = run_cdf_experiment(CdfQuantity::Se, {Architecture::Cf, Architecture::SmallCell, Architecture::Cellular},
                                      c, o);
    const auto &cf = r[0].summary, &sc = r[1].summary, &cel = r[2].summary;
    v.require(cf.median > sc.median && sc.median > cel.median, "median CF > SC > cellular");
    const double q_sc = cf.p95_likely / sc.p95_likely;
    const double q_cel = cf.p95_likely / cel.p95_likely;
    v.require(in_band(q_sc, 1.3, 3.5), "95%-likely CF/SC in [1.3, 3.5]");
    v.require(in_band(q_cel, 2.5, 10.0), "95%-likely CF/cellular in [2.5, 10]");
    v.detail << " medians cf=" << cf.median << " sc=" << sc.median << " cellular=" << cel.median
             << "; 95%-likely CF/SC=" << q_sc << " CF/cellular=" << q_cel;
    report("SE architecture ordering", v, t0);
}

void architecture_he_ordering()
{
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    RunOptions o;
    o.realizations = 5000;
    o.threads = kThreads;
    const auto r = run_cdf_experiment(CdfQuantity::He, {Architecture::Cf, Architecture::SmallCell, Architecture::Cellular},
                                      ScenarioConfig{}, o);
    const auto &cf = r[0].summary, &sc = r[1].summary, &cel = r[2].summary;
    v.require(sc.median > cf.median && cf.median > cel.median, "median SC > CF > cellular");
    const double q = sc.median / cf.median;
    v.require(in_band(q, 2.5, 6.0), "median SC/CF in [2.5, 6]");
    v.detail << " medians [mW] cf=" << cf.median << " sc=" << sc.median << " cellular=" << cel.median
             << "; SC/CF=" << q;
    report("HE architecture ordering", v, t0);
}

double value_at(const std::vector<SweepPoint> &pts, const std::string &variant, double rho)
{
    for (const auto &p : pts)
        if (p.variant == variant && std::abs(p.rho - rho) < 1e-9)
            return p.median_se;
    throw std::logic_error("missing sweep point");
}

double peak(const std::vector<SweepPoint> &pts, const std::string &variant)
{
    double best = 0.0;
    for (const auto &p : pts)
        if (p.variant == variant)
            best = std::max(best, p.median_se);
    return best;
}

void rho_sweep()
{
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    const ScenarioConfig base;
    const std::vector<std::string> labels = {"cf", "cf/N=4", "cf/H=40", "cf/kappa=0.9", "cf/kappa=1"};
    std::vector<SweepVariant> vars;
    for (const auto &l : labels)
        vars.push_back(parse_sweep_variant(l, base));
    RunOptions o;
    o.realizations = 1000;
    o.threads = kThreads;
    const auto pts = run_rho_sweep(vars, rho_grid(0.05), o);

    bool endpoints = true, interior = true;
    for (const auto &l : labels)
    {
        endpoints = endpoints && value_at(pts, l, 0.0) == 0.0 && value_at(pts, l, 1.0) == 0.0;
        const double a = argmax_rho(pts, l);
        interior = interior && a > 0.0 && a < 1.0 && peak(pts, l) > 0.0;
    }
    v.require(endpoints, "SE == 0 at rho in {0, 1}");
    v.require(interior, "interior argmax");
    const double q = value_at(pts, "cf/kappa=0.9", 0.4) / value_at(pts, "cf/kappa=1", 0.4);
    v.require(in_band(q, 0.65, 0.85), "kappa 0.9/1.0 at rho=0.4 in [0.65, 0.85]");
    const double a2 = argmax_rho(pts, "cf"), a4 = argmax_rho(pts, "cf/N=4"), a40 = argmax_rho(pts, "cf/H=40");
    v.require(peak(pts, "cf/N=4") > peak(pts, "cf") && a4 < a2, "N 2 -> 4 raises SE and lowers argmax");
    v.require(peak(pts, "cf") > peak(pts, "cf/H=40") && a2 < a40, "H 40 -> 20 raises SE and lowers argmax");
    v.detail << " argmax N=2,H=20: " << a2 << ", N=4: " << a4 << ", H=40: " << a40 << "; peaks " << peak(pts, "cf")
             << " / " << peak(pts, "cf/N=4") << " / " << peak(pts, "cf/H=40") << "; kappa ratio at 0.4 = " << q;
    report("rho sweep", v, t0);
}

// Per-run counter relations; `line` is the line-path run on the same placement.
bool counters_hold(const TrajectoryRun &run, const TrajectoryLog &line, const ScenarioConfig &c)
{
    const auto &g = run.log;
    if (!g.arrived)
        return false;
    const long n_ap = static_cast<long>(g.visited_aps.size());
    switch (run.scheme)
    {
    case Scheme::Angle:
        return g.direction_searches == static_cast<long>(c.M) * g.slots_used && g.direction_switches >= 1 &&
               g.direction_switches <= g.slots_used && g.slots_used > line.slots_used;
    case Scheme::ApSearch:
        return g.direction_switches == n_ap + 1 && g.direction_searches <= (c.L + 1) * (n_ap + 1) &&
               g.slots_used >= line.slots_used;
    case Scheme::Line:
        return g.direction_switches == 1 && g.direction_searches == 1;
    case Scheme::AllAps:
        return g.direction_switches <= c.L;
    }
    return false;
}

void trajectory()
{
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    ScenarioConfig c;
    RunOptions o;
    o.realizations = 200;
    o.threads = kThreads;
    const std::vector<Scheme> schemes = {Scheme::Angle, Scheme::ApSearch, Scheme::Line};
    const auto ex = run_trajectory_experiment({Architecture::Cf}, schemes, c, o, 0);
    double sum[3] = {0.0, 0.0, 0.0};
    long bad_counters = 0, angle_wins = 0, ap_wins = 0;
    for (std::size_t i = 0; i < ex.runs.size(); ++i)
    {
        if (i % 3 == 0)
        {
            angle_wins += ex.runs[i].average_se >= ex.runs[i + 2].average_se ? 1 : 0;
            ap_wins += ex.runs[i + 1].average_se >= ex.runs[i + 2].average_se ? 1 : 0;
        }
        sum[i % 3] += ex.runs[i].average_se;
        bad_counters += counters_hold(ex.runs[i], ex.runs[i - i % 3 + 2].log, c) ? 0 : 1;
    }
    const double angle = sum[0] / 200, ap = sum[1] / 200, line = sum[2] / 200;
    const double g_angle = angle / line - 1.0, g_ap = ap / line - 1.0;
    v.require(angle >= ap && ap >= line, "aggregate angle >= AP >= line");
    v.require(in_band(g_angle, 0.02, 0.09), "angle gain in [2%, 9%]");
    v.require(in_band(g_ap, 0.005, 0.05), "AP gain in [0.5%, 5%]");
    v.require(bad_counters == 0, "counter relations on every run");

    // Terrestrial user present: LSFD against matched filter on the same line path.
    ScenarioConfig ct = c;
    ct.tue_enabled = true;
    const auto tex =
        run_trajectory_experiment({Architecture::Cf, Architecture::CfLsfd}, {Scheme::Line}, ct, o, 0);
    long lsfd_below = 0;
    for (std::size_t r = 0; r < 200; ++r)
        lsfd_below += tex.runs[2 * r + 1].average_se >= tex.runs[2 * r].average_se ? 0 : 1;
    v.require(lsfd_below == 0, "LSFD >= MF on every placement");
    v.detail << " mean avg-SE angle=" << angle << " ap=" << ap << " line=" << line << "; gains angle "
             << 100 * g_angle << "% ap " << 100 * g_ap << "%; placements at or above line: angle " << angle_wins << ", ap " << ap_wins
             << "; counter violations " << bad_counters
             << "; LSFD < MF on " << lsfd_below << " of 200";
    report("trajectory", v, t0);
}

void determinism()
{
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    ScenarioConfig c;
    c.se_mc_draws = 200;
    ScenarioConfig ct = c;
    ct.uav_start = Position{20.0, 20.0};
    ct.uav_dest = Position{26.0, 24.0};
    std::string ref;
    for (int threads : {1, 2, 4})
    {
        RunOptions o;
        o.realizations = 24;
        o.threads = threads;
        std::ostringstream s;
        write_cdf_csv(s, run_cdf_experiment(CdfQuantity::Se, {Architecture::Cf, Architecture::SmallCell,
                                                              Architecture::Cellular},
                                            c, o));
        write_rho_sweep_csv(s, run_rho_sweep({parse_sweep_variant("cf", c), parse_sweep_variant("cellular", c)},
                                             rho_grid(0.25), o));
        o.realizations = 4;
        const auto ex = run_trajectory_experiment({Architecture::Cf}, {Scheme::Angle, Scheme::ApSearch}, ct, o, 1);
        write_trajectory_summary_csv(s, ex);
        write_trajectory_csv(s, ex.runs[0].log);
        ValidationOptions vo;
        vo.realizations = 5000;
        vo.threads = threads;
        write_validation_csv(s, run_validation(c, vo));
        if (threads == 1)
            ref = s.str();
        else
            v.require(s.str() == ref, "threads=" + std::to_string(threads) + " output differs");
    }
    v.detail << " CDF, sweep, trajectory and validation CSVs (" << ref.size() << " bytes) identical for 1, 2, 4 threads";
    report("determinism", v, t0);
}

} // namespace

int main()
{
    closed_form_validation();
    algebraic_identities();
    architecture_se_ordering();
    architecture_he_ordering();
    rho_sweep();
    trajectory();
    determinism();
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
