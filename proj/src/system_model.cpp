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

#include "cfuav/system_model.hpp"

#include <algorithm>
#include <cmath>

namespace cfuav
{

std::string to_string(Architecture a)
{
    switch (a)
    {
    case Architecture::Cf:
        return "cf";
    case Architecture::CfLsfd:
        return "cf-lsfd";
    case Architecture::SmallCell:
        return "sc";
    case Architecture::Cellular:
        return "cellular";
    }
    return "unknown";
}

Architecture parse_architecture(const std::string &name)
{
    if (name == "cf")
        return Architecture::Cf;
    if (name == "cf-lsfd")
        return Architecture::CfLsfd;
    if (name == "sc")
        return Architecture::SmallCell;
    if (name == "cellular")
        return Architecture::Cellular;
    throw ConfigError("unknown variant '" + name + "' (expected cf, cf-lsfd, sc or cellular)");
}

FrozenScattering draw_scattering(const ScenarioConfig &config, bool with_tue, RandomStream &rng)
{
    FrozenScattering s;
    for (int l = 0; l < config.L; ++l)
        s.ap.push_back(draw_cluster_offsets(config.n_clusters, config.cluster_spread_deg, rng));
    s.bs = draw_cluster_offsets(config.n_clusters, config.cluster_spread_deg, rng);
    if (with_tue)
    {
        for (int l = 0; l < config.L; ++l)
            s.tue_ap.push_back(draw_cluster_offsets(config.n_clusters, config.cluster_spread_deg, rng));
        s.tue_bs = draw_cluster_offsets(config.n_clusters, config.cluster_spread_deg, rng);
    }
    return s;
}

SystemModel::SystemModel(ScenarioConfig config, Placement placement, FrozenScattering scattering)
    : config_(std::move(config)), placement_(std::move(placement)), scattering_(std::move(scattering))
{
    if (static_cast<int>(placement_.ap_positions.size()) != config_.L ||
        static_cast<int>(scattering_.ap.size()) != config_.L)
        throw std::invalid_argument("SystemModel: placement does not match L");
    if (placement_.tue_position)
    {
        if (static_cast<int>(scattering_.tue_ap.size()) != config_.L)
            throw std::invalid_argument("SystemModel: missing terrestrial user scattering");
        TueState t;
        const Position &q = *placement_.tue_position;
        double best = -1.0;
        for (int l = 0; l < config_.L; ++l)
        {
            const auto ul = static_cast<std::size_t>(l);
            t.ap.push_back(tue_link(q, placement_.ap_positions[ul], config_.N, config_, scattering_.tue_ap[ul]));
            t.G_ap.push_back(tue_estimation(t.ap.back().R_te, config_.p_te, config_.sigma2));
            if (t.ap.back().beta_te > best)
            {
                best = t.ap.back().beta_te;
                t.strongest_ap = l;
            }
        }
        t.bs = tue_link(q, placement_.bs_position, stacked_antennas(), config_, scattering_.tue_bs);
        t.G_bs = tue_estimation(t.bs.R_te, config_.p_te, config_.sigma2);
        tue_ = std::move(t);
    }
}

SystemModel SystemModel::random(const ScenarioConfig &config, RandomStream &rng)
{
    Placement p = generate_placement(config, rng);
    FrozenScattering s = draw_scattering(config, p.tue_position.has_value(), rng);
    return SystemModel(config, std::move(p), std::move(s));
}

LinkStatistics SystemModel::ap_link(const Position &uav, int l) const
{
    const auto ul = static_cast<std::size_t>(l);
    return uav_link(uav, placement_.ap_positions[ul], config_.N, config_, scattering_.ap[ul]);
}

std::vector<LinkStatistics> SystemModel::ap_links(const Position &uav) const
{
    std::vector<LinkStatistics> out;
    out.reserve(static_cast<std::size_t>(config_.L));
    for (int l = 0; l < config_.L; ++l)
        out.push_back(ap_link(uav, l));
    return out;
}

LinkStatistics SystemModel::bs_link(const Position &uav) const
{
    return uav_link(uav, placement_.bs_position, stacked_antennas(), config_, scattering_.bs);
}

SlotEnergyState split_energy(double p_he, const ScenarioConfig &config)
{
    const double tau_e = config.tau_e();
    if (config.tau_c - config.tau_p - tau_e > 0.0)
        return advance_energy(p_he, config.tau_c, config.tau_p, tau_e);
    SlotEnergyState s;
    s.p_he = p_he;
    s.partial = config.tau_p / (config.tau_c - tau_e);
    s.p_u = 0.0;
    s.p_pilot_next = config.tau_c / config.tau_p * p_he;
    return s;
}

namespace
{

// Everything the slot evaluation needs about one link at one pilot power.
struct LinkSnapshot
{
    LinkStatistics stats;
    EstimationMatrices mats;
    LinkMoments moments;
    double ui = 0.0;     // terrestrial user data interference
    double pickup = 0.0; // energy from terrestrial user precoding
};

LinkSnapshot snapshot(LinkStatistics stats, double p, const ScenarioConfig &c, const TueLinkStatistics *tue,
                      const CMatrix *G_te)
{
    LinkSnapshot s;
    s.stats = std::move(stats);
    s.mats = estimation_matrices(s.stats, p, c.kappa, c.sigma2);
    s.moments = link_moments(s.stats.h_bar, s.stats.R, s.mats);
    if (tue)
    {
        s.ui = ui_term(s.stats.h_bar, s.mats.Q, tue->R_te);
        s.pickup = tue_pickup(s.stats.h_bar, s.stats.R, *G_te);
    }
    return s;
}

std::vector<LinkSnapshot> ap_snapshots(const SystemModel &model, const Position &uav, double p)
{
    const auto &c = model.config();
    const TueState *t = model.tue();
    std::vector<LinkSnapshot> out;
    out.reserve(static_cast<std::size_t>(c.L));
    for (int l = 0; l < c.L; ++l)
    {
        const auto ul = static_cast<std::size_t>(l);
        out.push_back(snapshot(model.ap_link(uav, l), p, c, t ? &t->ap[ul] : nullptr, t ? &t->G_ap[ul] : nullptr));
    }
    return out;
}

LinkSnapshot bs_snapshot(const SystemModel &model, const Position &uav, double p)
{
    const TueState *t = model.tue();
    return snapshot(model.bs_link(uav), p, model.config(), t ? &t->bs : nullptr, t ? &t->G_bs : nullptr);
}

struct Gathered
{
    std::vector<LinkMoments> moments;
    std::vector<double> ui;
    std::vector<double> pickup;
};

Gathered gather(const std::vector<LinkSnapshot> &snaps, bool with_tue)
{
    Gathered g;
    for (const auto &s : snaps)
    {
        g.moments.push_back(s.moments);
        if (with_tue)
        {
            g.ui.push_back(s.ui);
            g.pickup.push_back(s.pickup);
        }
    }
    return g;
}

double energy_of(const SystemModel &model, Architecture arch, const std::vector<LinkSnapshot> *aps,
                 const LinkSnapshot *bs, const Gathered *g, int *energy_ap)
{
    const auto &c = model.config();
    const TueState *t = model.tue();
    switch (arch)
    {
    case Architecture::Cf:
    case Architecture::CfLsfd:
        return he_cf(g->moments, c.p_d_cf, c.kappa, c.tau_e(), c.tau_c, g->pickup);
    case Architecture::SmallCell:
    {
        const auto e = he_sc(g->moments, c.p_d_sc(), c.kappa, c.tau_e(), c.tau_c, g->pickup, c.sc_tue_policy,
                             t ? t->strongest_ap : -1);
        if (energy_ap)
            *energy_ap = e.best_ap;
        return e.p_he;
    }
    case Architecture::Cellular:
        return he_cellular(bs->moments, c.p_d_c, c.kappa, c.tau_e(), c.tau_c, t ? bs->pickup : -1.0);
    }
    (void)aps;
    return 0.0;
}

} // namespace

SlotEnergyState evaluate_energy(const SystemModel &model, Architecture arch, const Position &uav,
                                double pilot_power, int *energy_ap)
{
    const bool with_tue = model.tue() != nullptr;
    if (arch == Architecture::Cellular)
    {
        const auto bs = bs_snapshot(model, uav, pilot_power);
        return split_energy(energy_of(model, arch, nullptr, &bs, nullptr, energy_ap), model.config());
    }
    const auto aps = ap_snapshots(model, uav, pilot_power);
    const auto g = gather(aps, with_tue);
    return split_energy(energy_of(model, arch, &aps, nullptr, &g, energy_ap), model.config());
}

SlotOutcome evaluate_slot(const SystemModel &model, Architecture arch, const Position &uav, double pilot_power,
                          SeMethod method, RandomStream *rng)
{
    const auto &c = model.config();
    const TueState *t = model.tue();
    const bool with_tue = t != nullptr;
    const double prelog = c.data_prelog();
    if (method == SeMethod::MonteCarlo && !rng && (arch == Architecture::SmallCell || arch == Architecture::Cellular))
        throw std::invalid_argument("evaluate_slot: Monte Carlo SE needs a random stream");

    SlotOutcome out;
    if (arch == Architecture::Cellular)
    {
        const auto bs = bs_snapshot(model, uav, pilot_power);
        out.energy = split_energy(energy_of(model, arch, nullptr, &bs, nullptr, nullptr), c);
        if (!(prelog > 0.0) || out.energy.p_u == 0.0)
            return out;
        if (method == SeMethod::ClosedForm)
        {
            std::vector<double> ui;
            if (with_tue)
                ui.push_back(bs.ui);
            out.se = se_cf_closed_form(std::span(&bs.moments, 1), out.energy.p_u, c.kappa, c.sigma2, prelog, ui,
                                       c.p_te_u)
                         .se;
        }
        else
        {
            MrLink link{&bs.stats.h_bar, &bs.mats.Q, &bs.mats.C, with_tue ? &t->bs.R_te : nullptr};
            const auto r = se_cellular(link, out.energy.p_u, c.kappa, c.sigma2, prelog, c.se_mc_draws, *rng,
                                       c.p_te_u);
            out.se = r.se;
            out.se_std_error = r.std_error;
        }
        return out;
    }

    const auto aps = ap_snapshots(model, uav, pilot_power);
    const auto g = gather(aps, with_tue);
    out.energy = split_energy(energy_of(model, arch, &aps, nullptr, &g, &out.energy_ap), c);
    if (!(prelog > 0.0) || out.energy.p_u == 0.0)
        return out;
    const double p_u = out.energy.p_u;

    switch (arch)
    {
    case Architecture::Cf:
        out.se = se_cf_closed_form(g.moments, p_u, c.kappa, c.sigma2, prelog, g.ui, c.p_te_u).se;
        break;
    case Architecture::CfLsfd:
        out.se = se_lsfd(lsfd_vectors(g.moments, g.ui), p_u, c.p_te_u, c.kappa, c.sigma2, prelog);
        break;
    case Architecture::SmallCell:
        if (method == SeMethod::ClosedForm)
        {
            double best = -1.0;
            for (std::size_t l = 0; l < aps.size(); ++l)
            {
                std::vector<double> ui;
                if (with_tue)
                    ui.push_back(aps[l].ui);
                const double se =
                    se_cf_closed_form(std::span(&aps[l].moments, 1), p_u, c.kappa, c.sigma2, prelog, ui, c.p_te_u).se;
                if (se > best)
                {
                    best = se;
                    out.se_ap = static_cast<int>(l);
                }
            }
            out.se = best;
        }
        else
        {
            std::vector<MrLink> links;
            for (std::size_t l = 0; l < aps.size(); ++l)
                links.push_back({&aps[l].stats.h_bar, &aps[l].mats.Q, &aps[l].mats.C,
                                 with_tue ? &t->ap[l].R_te : nullptr});
            const auto r = se_sc(links, p_u, c.kappa, c.sigma2, prelog, c.se_mc_draws, *rng, c.p_te_u);
            out.se = r.se;
            out.se_std_error = r.std_error;
            out.se_ap = r.best_ap;
        }
        break;
    case Architecture::Cellular:
        break;
    }
    return out;
}

double warm_up_pilot(const SystemModel &model, Architecture arch, const Position &uav, int slots)
{
    double p = model.config().p0_pilot;
    for (int n = 0; n < slots; ++n)
        p = evaluate_energy(model, arch, uav, p).p_pilot_next;
    return p;
}

} // namespace cfuav
