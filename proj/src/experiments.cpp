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

#include "cfuav/experiments.hpp"

#include "cfuav/config_file.hpp"
#include "cfuav/format.hpp"
#include "cfuav/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace cfuav
{

const char *git_describe() { return CFUAV_GIT_DESCRIBE; }

SystemModel realization_model(const ScenarioConfig &config, std::uint64_t seed, long r)
{
    RandomStream rng({seed, static_cast<std::uint64_t>(r), 0});
    return SystemModel::random(config, rng);
}

namespace
{

Position uniform_uav(const ScenarioConfig &c, std::uint64_t seed, long r)
{
    RandomStream rng({seed, static_cast<std::uint64_t>(r), 1});
    const double x = rng.uniform(0.0, c.area_side);
    const double y = rng.uniform(0.0, c.area_side);
    return {x, y};
}

void check_options(const RunOptions &o)
{
    if (o.realizations < 1)
        throw ConfigError("realizations must be at least 1");
    if (o.warm_up < 0)
        throw ConfigError("warm-up slot count must be non-negative");
}

double median_of(std::vector<double> v) { return summarize(std::move(v)).median; }

} // namespace

std::vector<CdfVariant> run_cdf_experiment(CdfQuantity quantity, const std::vector<Architecture> &variants,
                                           const ScenarioConfig &config, const RunOptions &options)
{
    check_options(options);
    validate(config);
    if (variants.empty())
        throw ConfigError("at least one variant is required");
    const auto R = static_cast<std::size_t>(options.realizations);
    std::vector<std::vector<double>> samples(variants.size(), std::vector<double>(R));

    parallel_for(R, options.threads,
                 [&](std::size_t r)
                 {
                     const auto ri = static_cast<long>(r);
                     const SystemModel model = realization_model(config, options.seed, ri);
                     const Position uav = uniform_uav(config, options.seed, ri);
                     for (std::size_t k = 0; k < variants.size(); ++k)
                     {
                         const double p = warm_up_pilot(model, variants[k], uav, options.warm_up);
                         if (quantity == CdfQuantity::He)
                         {
                             samples[k][r] = evaluate_energy(model, variants[k], uav, p).p_he;
                             continue;
                         }
                         RandomStream mc({options.seed, r, 2, k});
                         samples[k][r] = evaluate_slot(model, variants[k], uav, p, SeMethod::MonteCarlo, &mc).se;
                     }
                 });

    std::vector<CdfVariant> out;
    for (std::size_t k = 0; k < variants.size(); ++k)
    {
        CdfVariant v;
        v.variant = to_string(variants[k]);
        v.samples = std::move(samples[k]);
        v.summary = summarize(v.samples);
        out.push_back(std::move(v));
    }
    return out;
}

void write_cdf_csv(std::ostream &out, const std::vector<CdfVariant> &result)
{
    out << "variant,sample\n";
    for (const auto &v : result)
        for (double x : v.samples)
            out << v.variant << ',' << format_real(x) << '\n';
}

void write_cdf_summary_csv(std::ostream &out, const std::vector<CdfVariant> &result)
{
    out << "variant,median,p95_likely,mean\n";
    for (const auto &v : result)
        out << v.variant << ',' << format_real(v.summary.median) << ',' << format_real(v.summary.p95_likely) << ','
            << format_real(v.summary.mean) << '\n';
}

SweepVariant parse_sweep_variant(const std::string &text, const ScenarioConfig &base)
{
    SweepVariant v;
    v.label = text;
    v.config = base;
    std::stringstream in(text);
    std::string part;
    bool first = true;
    while (std::getline(in, part, '/'))
    {
        if (first)
        {
            v.arch = parse_architecture(part);
            first = false;
            continue;
        }
        const auto eq = part.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == part.size())
            throw ConfigError("sweep variant '" + text + "': expected key=value, got '" + part + "'");
        apply_config_key(v.config, part.substr(0, eq), part.substr(eq + 1));
    }
    if (first)
        throw ConfigError("empty sweep variant");
    validate(v.config);
    return v;
}

std::vector<double> rho_grid(double step)
{
    if (!(step > 0.0 && step <= 1.0))
        throw ConfigError("rho step must lie in (0, 1]");
    const auto n = static_cast<long>(std::ceil(1.0 / step - 1e-9));
    std::vector<double> g;
    for (long i = 0; i < n; ++i)
        g.push_back(static_cast<double>(i) * step);
    g.push_back(1.0);
    return g;
}

std::vector<SweepPoint> run_rho_sweep(const std::vector<SweepVariant> &variants, const std::vector<double> &rhos,
                                      const RunOptions &options)
{
    check_options(options);
    if (variants.empty() || rhos.empty())
        throw ConfigError("rho sweep needs at least one variant and one rho");
    for (double rho : rhos)
        if (!(rho >= 0.0 && rho <= 1.0))
            throw ConfigError("rho values must lie in [0, 1]");
    const auto R = static_cast<std::size_t>(options.realizations);
    const std::size_t V = variants.size(), P = rhos.size();
    std::vector<double> se(V * P * R);

    parallel_for(R, options.threads,
                 [&](std::size_t r)
                 {
                     const auto ri = static_cast<long>(r);
                     for (std::size_t v = 0; v < V; ++v)
                     {
                         const auto &var = variants[v];
                         const SystemModel base = realization_model(var.config, options.seed, ri);
                         const Position uav = uniform_uav(var.config, options.seed, ri);
                         for (std::size_t k = 0; k < P; ++k)
                         {
                             ScenarioConfig c = var.config;
                             c.rho = rhos[k];
                             const SystemModel model(c, base.placement(), base.scattering());
                             const double p = warm_up_pilot(model, var.arch, uav, options.warm_up);
                             RandomStream mc({options.seed, r, 3, v, k});
                             se[(v * P + k) * R + r] =
                                 evaluate_slot(model, var.arch, uav, p, SeMethod::MonteCarlo, &mc).se;
                         }
                     }
                 });

    std::vector<SweepPoint> out;
    for (std::size_t v = 0; v < V; ++v)
        for (std::size_t k = 0; k < P; ++k)
        {
            const auto begin = se.begin() + static_cast<std::ptrdiff_t>((v * P + k) * R);
            out.push_back({variants[v].label, rhos[k],
                           median_of(std::vector<double>(begin, begin + static_cast<std::ptrdiff_t>(R)))});
        }
    return out;
}

void write_rho_sweep_csv(std::ostream &out, const std::vector<SweepPoint> &points)
{
    out << "variant,rho,median_se\n";
    for (const auto &p : points)
        out << p.variant << ',' << format_real(p.rho) << ',' << format_real(p.median_se) << '\n';
}

double argmax_rho(const std::vector<SweepPoint> &points, const std::string &variant)
{
    const SweepPoint *best = nullptr;
    for (const auto &p : points)
        if (p.variant == variant && (!best || p.median_se > best->median_se))
            best = &p;
    if (!best)
        throw std::invalid_argument("argmax_rho: unknown variant '" + variant + "'");
    return best->rho;
}

std::string to_string(Scheme s)
{
    switch (s)
    {
    case Scheme::Angle:
        return "angle";
    case Scheme::ApSearch:
        return "ap";
    case Scheme::Line:
        return "line";
    case Scheme::AllAps:
        return "all-aps";
    }
    return "unknown";
}

Scheme parse_scheme(const std::string &name)
{
    if (name == "angle")
        return Scheme::Angle;
    if (name == "ap")
        return Scheme::ApSearch;
    if (name == "line")
        return Scheme::Line;
    if (name == "all-aps")
        return Scheme::AllAps;
    throw ConfigError("unknown scheme '" + name + "' (expected angle, ap, line or all-aps)");
}

TrajectoryExperiment run_trajectory_experiment(const std::vector<Architecture> &variants,
                                               const std::vector<Scheme> &schemes, const ScenarioConfig &config,
                                               const RunOptions &options, long keep_logs)
{
    check_options(options);
    validate(config);
    if (variants.empty() || schemes.empty())
        throw ConfigError("trajectory experiment needs at least one variant and one scheme");
    const Position start = config.uav_start.value_or(Position{0.0, 0.0});
    const Position dest = config.uav_dest.value_or(Position{85.0, 85.0});
    const auto R = static_cast<std::size_t>(options.realizations);
    const std::size_t per = variants.size() * schemes.size();

    TrajectoryExperiment ex;
    ex.runs.resize(R * per);
    ex.placements.resize(R);
    parallel_for(R, options.threads,
                 [&](std::size_t r)
                 {
                     const auto ri = static_cast<long>(r);
                     const SystemModel model = realization_model(config, options.seed, ri);
                     ex.placements[r] = model.placement();
                     const auto &aps = model.placement().ap_positions;
                     for (std::size_t v = 0; v < variants.size(); ++v)
                     {
                         const SeObjective obj = make_objective(model, variants[v]);
                         for (std::size_t s = 0; s < schemes.size(); ++s)
                         {
                             TrajectoryRun &run = ex.runs[r * per + v * schemes.size() + s];
                             run.placement = ri;
                             run.arch = variants[v];
                             run.scheme = schemes[s];
                             switch (schemes[s])
                             {
                             case Scheme::Angle:
                                 run.log = plan_angle_search(start, dest, obj, config);
                                 break;
                             case Scheme::ApSearch:
                                 run.log = plan_ap_search(start, dest, aps, obj, config);
                                 break;
                             case Scheme::Line:
                                 run.log = plan_line_path(start, dest, obj, config);
                                 break;
                             case Scheme::AllAps:
                                 run.log = plan_all_aps(start, aps, obj, config);
                                 break;
                             }
                             run.average_se = run.log.average_se();
                             if (ri >= keep_logs)
                             {
                                 run.log.positions = {};
                                 run.log.se = {};
                                 run.log.p_he = {};
                                 run.log.p_u = {};
                             }
                         }
                     }
                 });
    return ex;
}

void write_trajectory_summary_csv(std::ostream &out, const TrajectoryExperiment &result)
{
    out << "placement,variant,scheme,average_se,slots_used,direction_switches,direction_searches,n_ap,arrived\n";
    for (const auto &run : result.runs)
        out << run.placement << ',' << to_string(run.arch) << ',' << to_string(run.scheme) << ','
            << format_real(run.average_se) << ',' << run.log.slots_used << ',' << run.log.direction_switches << ','
            << run.log.direction_searches << ',' << run.log.visited_aps.size() << ','
            << (run.log.arrived ? "true" : "false") << '\n';
}

void write_placement_csv(std::ostream &out, const Placement &placement, const TrajectoryLog &log)
{
    out << "kind,index,x,y\n";
    for (std::size_t l = 0; l < placement.ap_positions.size(); ++l)
        out << "ap," << l << ',' << format_real(placement.ap_positions[l].x) << ','
            << format_real(placement.ap_positions[l].y) << '\n';
    out << "bs,0," << format_real(placement.bs_position.x) << ',' << format_real(placement.bs_position.y) << '\n';
    if (placement.tue_position)
        out << "tue,0," << format_real(placement.tue_position->x) << ',' << format_real(placement.tue_position->y)
            << '\n';
    out << "start,0," << format_real(log.start.x) << ',' << format_real(log.start.y) << '\n';
    if (!log.positions.empty())
        out << "dest,0," << format_real(log.positions.back().x) << ',' << format_real(log.positions.back().y)
            << '\n';
}

void write_validation_csv(std::ostream &out, const std::vector<MonteCarloReport> &reports)
{
    out << "quantity,closed_form,sample_mean,rel_error,pass\n";
    for (const auto &r : reports)
        out << r.quantity << ',' << format_real(r.closed_form) << ',' << format_real(r.sample_mean) << ','
            << format_real(r.rel_error) << ',' << (r.pass ? "true" : "false") << '\n';
}

void write_complexity_csv(std::ostream &out, const ScenarioConfig &c, int max_users)
{
    out << "k,l,n,statistics,estimation,beamforming,energy_tx,combining,total\n";
    for (int k = 1; k <= max_users; ++k)
    {
        const auto x = complexity_count(k, c.L, c.N, c.tau_c, c.tau_p, c.tau_e());
        out << k << ',' << c.L << ',' << c.N << ',' << format_real(x.statistics) << ','
            << format_real(x.estimation) << ',' << format_real(x.beamforming) << ',' << format_real(x.energy_tx)
            << ',' << format_real(x.combining) << ',' << format_real(x.total()) << '\n';
    }
}

void write_text_file(const std::filesystem::path &dir, const std::string &name, const std::string &text)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error("cannot create directory '" + dir.string() + "': " + ec.message());
    const auto path = dir / name;
    std::ofstream f(path, std::ios::binary);
    f << text;
    f.close();
    if (!f)
        throw std::runtime_error("cannot write '" + path.string() + "'");
}

std::string sidecar_json(const std::string &kind, const ScenarioConfig &config, const RunOptions &options,
                         double wall_clock_s, const std::map<std::string, std::string> &extra)
{
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["seed"] = options.seed;
    j["realizations"] = options.realizations;
    j["threads"] = options.threads;
    j["warm_up"] = options.warm_up;
    j["git_describe"] = git_describe();
    j["wall_clock_s"] = wall_clock_s;
    nlohmann::ordered_json cfg;
    for (const auto &[k, v] : config_echo(config))
        cfg[k] = v;
    j["config"] = cfg;
    for (const auto &[k, v] : extra)
        j[k] = v;
    return j.dump(2) + "\n";
}

} // namespace cfuav
