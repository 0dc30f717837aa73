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
#include "cfuav/experiments.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

using namespace cfuav;

namespace
{

struct Common
{
    std::string config_path;
    std::vector<std::string> overrides;
    std::uint64_t seed = 1;
    std::string out = "results";
    long realizations = 0; // 0 selects the subcommand default
    int threads = 1;
    std::vector<std::string> variants;
};

void add_common(CLI::App *app, Common &c)
{
    app->add_option("--config", c.config_path, "key = value scenario file")->check(CLI::ExistingFile);
    app->add_option("--set", c.overrides, "override one config key, key=value (repeatable)");
    app->add_option("--seed", c.seed, "master seed");
    app->add_option("--out", c.out, "output directory");
    app->add_option("--realizations", c.realizations, "placements / realizations")->check(CLI::PositiveNumber);
    app->add_option("--threads", c.threads, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
    app->add_option("--variants", c.variants, "architectures (cf, cf-lsfd, sc, cellular)")->delimiter(',');
}

ScenarioConfig load(const Common &c)
{
    ScenarioConfig cfg;
    if (!c.config_path.empty())
        cfg = load_config_file(c.config_path);
    for (const auto &kv : c.overrides)
    {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size())
            throw ConfigError("--set expects key=value, got '" + kv + "'");
        apply_config_key(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    validate(cfg);
    return cfg;
}

RunOptions options(const Common &c, long default_realizations)
{
    RunOptions o;
    o.realizations = c.realizations > 0 ? c.realizations : default_realizations;
    o.seed = c.seed;
    o.threads = c.threads;
    return o;
}

std::vector<Architecture> architectures(const Common &c, std::vector<Architecture> fallback)
{
    if (c.variants.empty())
        return fallback;
    std::vector<Architecture> out;
    for (const auto &v : c.variants)
        out.push_back(parse_architecture(v));
    return out;
}

std::string join(const std::vector<std::string> &v)
{
    std::string s;
    for (const auto &x : v)
        s += (s.empty() ? "" : ",") + x;
    return s;
}

template <class F> std::string to_text(F &&write)
{
    std::ostringstream os;
    write(os);
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"UAV uplink simulator with wireless power transfer (cell-free, small cell, cellular)"};
    app.require_subcommand(1);

    Common cdf_se, cdf_he, sweep, traj, val, cplx;
    int warm_up_se = 5, warm_up_he = 5, warm_up_sweep = 5;
    double rho_step = 0.05, tolerance = 0.02;
    std::vector<std::string> sweep_variants;
    std::vector<std::string> scheme_names = {"angle", "ap", "line"};
    long log_placements = 1;
    int max_users = 10;

    auto *c_se = app.add_subcommand("cdf-se", "SE distribution over random placements");
    add_common(c_se, cdf_se);
    c_se->add_option("--warm-up", warm_up_se, "energy-only slots before sampling")->check(CLI::NonNegativeNumber);

    auto *c_he = app.add_subcommand("cdf-he", "harvested energy distribution over random placements");
    add_common(c_he, cdf_he);
    c_he->add_option("--warm-up", warm_up_he, "energy-only slots before sampling")->check(CLI::NonNegativeNumber);

    auto *c_sw = app.add_subcommand("rho-sweep", "median SE against the time-splitting fraction");
    add_common(c_sw, sweep);
    c_sw->add_option("--warm-up", warm_up_sweep, "energy-only slots before sampling")->check(CLI::NonNegativeNumber);
    c_sw->add_option("--rho-step", rho_step, "grid step in (0, 1]");
    c_sw->add_option("--sweep-variants", sweep_variants, "arch/key=value/... labels, comma separated")
        ->delimiter(',');

    auto *c_tr = app.add_subcommand("trajectory", "trajectory design schemes on shared placements");
    add_common(c_tr, traj);
    c_tr->add_option("--schemes", scheme_names, "angle, ap, line, all-aps")->delimiter(',');
    c_tr->add_option("--log-placements", log_placements, "placements with per-slot CSV logs")
        ->check(CLI::NonNegativeNumber);

    auto *c_va = app.add_subcommand("validate", "closed forms against Monte Carlo");
    add_common(c_va, val);
    c_va->add_option("--tolerance", tolerance, "relative error bound");

    auto *c_cx = app.add_subcommand("complexity", "per-block operation counts");
    add_common(c_cx, cplx);
    c_cx->add_option("--max-users", max_users, "largest user count")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    const auto t0 = std::chrono::steady_clock::now();
    try
    {
        if (c_se->parsed() || c_he->parsed())
        {
            const bool se = c_se->parsed();
            const Common &c = se ? cdf_se : cdf_he;
            const auto cfg = load(c);
            auto o = options(c, 1000);
            o.warm_up = se ? warm_up_se : warm_up_he;
            const auto archs = architectures(c, {Architecture::Cf, Architecture::SmallCell, Architecture::Cellular});
            const auto res = run_cdf_experiment(se ? CdfQuantity::Se : CdfQuantity::He, archs, cfg, o);
            const std::string stem = se ? "cdf_se" : "cdf_he";
            write_text_file(c.out, stem + ".csv", to_text([&](std::ostream &s) { write_cdf_csv(s, res); }));
            write_text_file(c.out, stem + "_summary.csv",
                            to_text([&](std::ostream &s) { write_cdf_summary_csv(s, res); }));
            write_text_file(c.out, stem + ".json", sidecar_json(stem, cfg, o, seconds_since(t0)));
            write_cdf_summary_csv(std::cout, res);
            return 0;
        }
        if (c_sw->parsed())
        {
            const auto cfg = load(sweep);
            auto o = options(sweep, 200);
            o.warm_up = warm_up_sweep;
            if (sweep_variants.empty())
                sweep_variants = {"cf", "sc", "cellular"};
            std::vector<SweepVariant> vars;
            for (const auto &v : sweep_variants)
                vars.push_back(parse_sweep_variant(v, cfg));
            const auto pts = run_rho_sweep(vars, rho_grid(rho_step), o);
            write_text_file(sweep.out, "rho_sweep.csv",
                            to_text([&](std::ostream &s) { write_rho_sweep_csv(s, pts); }));
            write_text_file(sweep.out, "rho_sweep.json",
                            sidecar_json("rho-sweep", cfg, o, seconds_since(t0),
                                         {{"sweep_variants", join(sweep_variants)}}));
            for (const auto &v : vars)
                std::cout << v.label << " argmax_rho=" << argmax_rho(pts, v.label) << '\n';
            return 0;
        }
        if (c_tr->parsed())
        {
            const auto cfg = load(traj);
            const auto o = options(traj, 20);
            const auto archs = architectures(traj, {Architecture::Cf});
            std::vector<Scheme> schemes;
            for (const auto &s : scheme_names)
                schemes.push_back(parse_scheme(s));
            const auto ex = run_trajectory_experiment(archs, schemes, cfg, o, log_placements);
            write_text_file(traj.out, "trajectory_summary.csv",
                            to_text([&](std::ostream &s) { write_trajectory_summary_csv(s, ex); }));
            for (const auto &run : ex.runs)
            {
                if (run.placement >= log_placements)
                    continue;
                const std::string tag =
                    std::to_string(run.placement) + "_" + to_string(run.arch) + "_" + to_string(run.scheme);
                write_text_file(traj.out, "trajectory_" + tag + ".csv",
                                to_text([&](std::ostream &s) { write_trajectory_csv(s, run.log); }));
                write_text_file(traj.out, "placement_" + tag + ".csv",
                                to_text([&](std::ostream &s)
                                        { write_placement_csv(s, ex.placements[run.placement], run.log); }));
            }
            write_text_file(traj.out, "trajectory.json",
                            sidecar_json("trajectory", cfg, o, seconds_since(t0),
                                         {{"schemes", join(scheme_names)}}));
            return 0;
        }
        if (c_va->parsed())
        {
            const auto cfg = load(val);
            const auto o = options(val, 100000);
            ValidationOptions vo;
            vo.realizations = o.realizations;
            vo.seed = o.seed;
            vo.threads = o.threads;
            vo.tolerance = tolerance;
            const auto reports = run_validation(cfg, vo);
            write_text_file(val.out, "validation.csv",
                            to_text([&](std::ostream &s) { write_validation_csv(s, reports); }));
            write_text_file(val.out, "validation.json", sidecar_json("validate", cfg, o, seconds_since(t0)));
            bool ok = true;
            for (const auto &r : reports)
            {
                std::cout << (r.pass ? "ok   " : "FAIL ") << r.quantity << " rel_error=" << r.rel_error << '\n';
                ok = ok && r.pass;
            }
            return ok ? 0 : 1;
        }
        if (c_cx->parsed())
        {
            const auto cfg = load(cplx);
            const auto o = options(cplx, 1);
            write_text_file(cplx.out, "complexity.csv",
                            to_text([&](std::ostream &s) { write_complexity_csv(s, cfg, max_users); }));
            write_text_file(cplx.out, "complexity.json", sidecar_json("complexity", cfg, o, seconds_since(t0)));
            return 0;
        }
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
