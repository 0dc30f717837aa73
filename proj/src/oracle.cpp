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

#include "cfuav/oracle.hpp"

#include "cfuav/parallel.hpp"
#include "cfuav/system_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cfuav
{

MonteCarloReport make_report(const std::string &quantity, double closed_form, double sample_mean, long sample_count,
                             double tolerance, double floor)
{
    MonteCarloReport r;
    r.quantity = quantity;
    r.closed_form = closed_form;
    r.sample_mean = sample_mean;
    r.sample_count = sample_count;
    r.rel_error = std::abs(closed_form - sample_mean) / std::max(std::abs(closed_form), floor);
    r.pass = r.rel_error <= tolerance;
    return r;
}

namespace
{

constexpr long chunk_size = 2048;

// Fixed inputs of one simulated link.
struct OracleLink
{
    CVector h;
    CMatrix R_sqrt;
    CMatrix filter;
    CMatrix Rte_sqrt;
    CMatrix Fte;
};

OracleLink make_link(const LinkStatistics &s, const EstimationMatrices &m, const TueLinkStatistics &te,
                     const ScenarioConfig &c)
{
    return {s.h_bar, ChannelSampler(s.h_bar, s.R).sqrt_cov(), m.filter,
            ChannelSampler(CVector::Zero(te.R_te.rows()), te.R_te).sqrt_cov(),
            tue_estimation_filter(te.R_te, c.p_te, c.sigma2)};
}

// Running sums of one link.
struct LinkSums
{
    Complex a = 0.0;         // g_hat^H g
    double a2 = 0.0;         // |g_hat^H g|^2
    double ghat2 = 0.0;      // |g_hat|^2
    double est_dev2 = 0.0;   // |g_hat - h|^2
    double err2 = 0.0;       // |g - g_hat|^2
    double pickup = 0.0;     // |g^H h_hat_te|^2
    double te2 = 0.0;        // |h_hat_te|^2

    void add(const LinkSums &o)
    {
        a += o.a;
        a2 += o.a2;
        ghat2 += o.ghat2;
        est_dev2 += o.est_dev2;
        err2 += o.err2;
        pickup += o.pickup;
        te2 += o.te2;
    }
};

struct ChunkSums
{
    std::vector<LinkSums> ap;
    LinkSums bs;
    Complex A = 0.0;
    double A2 = 0.0;
    double hi = 0.0;
    double ns = 0.0;
    double ui = 0.0;
};

CMatrix noise(Eigen::Index rows, Eigen::Index cols, double variance, RandomStream &rng)
{
    return std::sqrt(variance) * rng.complex_normal_matrix(rows, cols);
}

// Simulates `n` realizations of one link. Returns the estimates and fills
// the per-link sums. `eta` is the common pilot distortion per realization.
CMatrix simulate_link(const OracleLink &k, const CVector &eta, double p, const ScenarioConfig &c, RandomStream &rng,
                      LinkSums &sums, CMatrix *g_out, CMatrix *h_te_out)
{
    const Eigen::Index n = eta.size();
    const Eigen::Index N = k.h.size();
    const double a = std::sqrt(c.kappa * p);
    CMatrix G = k.R_sqrt * rng.complex_normal_matrix(N, n);
    G.colwise() += k.h;
    CMatrix Z = noise(N, n, c.sigma2, rng);
    for (Eigen::Index j = 0; j < n; ++j)
        Z.col(j) += (a + eta(j)) * G.col(j);
    Z.colwise() -= a * k.h;
    CMatrix Gh = k.filter * Z;
    Gh.colwise() += k.h;

    const CMatrix Hte = k.Rte_sqrt * rng.complex_normal_matrix(N, n);
    const CMatrix Hte_hat = k.Fte * (std::sqrt(c.p_te) * Hte + noise(N, n, c.sigma2, rng));

    for (Eigen::Index j = 0; j < n; ++j)
    {
        const Complex x = Gh.col(j).dot(G.col(j));
        sums.a += x;
        sums.a2 += std::norm(x);
        sums.ghat2 += Gh.col(j).squaredNorm();
        sums.est_dev2 += (Gh.col(j) - k.h).squaredNorm();
        sums.err2 += (G.col(j) - Gh.col(j)).squaredNorm();
        sums.pickup += std::norm(G.col(j).dot(Hte_hat.col(j)));
        sums.te2 += Hte_hat.col(j).squaredNorm();
    }
    if (g_out)
        *g_out = std::move(G);
    if (h_te_out)
        *h_te_out = Hte;
    return Gh;
}

} // namespace

std::vector<MonteCarloReport> run_validation(const ScenarioConfig &config, const ValidationOptions &opt)
{
    if (opt.realizations < 1)
        throw ConfigError("validation needs at least one realization");
    ScenarioConfig c = config;
    c.tue_enabled = true;
    validate(c);

    RandomStream geo({opt.seed, 0});
    const SystemModel model = SystemModel::random(c, geo);
    const Position uav = opt.uav.value_or(Position{geo.uniform(0.0, c.area_side), geo.uniform(0.0, c.area_side)});
    const TueState &tue = *model.tue();

    const double p = warm_up_pilot(model, Architecture::Cf, uav, 5);
    const double p_u = evaluate_energy(model, Architecture::Cf, uav, p).p_u;

    // Closed forms.
    const auto stats = model.ap_links(uav);
    std::vector<EstimationMatrices> mats;
    std::vector<LinkMoments> moments;
    std::vector<double> ui_terms, pickups;
    std::vector<OracleLink> links;
    double q_trace = 0.0, c_trace = 0.0, ups = 0.0, g_trace = 0.0;
    for (std::size_t l = 0; l < stats.size(); ++l)
    {
        mats.push_back(estimation_matrices(stats[l], p, c.kappa, c.sigma2));
        moments.push_back(link_moments(stats[l].h_bar, stats[l].R, mats[l]));
        ui_terms.push_back(ui_term(stats[l].h_bar, mats[l].Q, tue.ap[l].R_te));
        pickups.push_back(tue_pickup(stats[l].h_bar, stats[l].R, tue.G_ap[l]));
        links.push_back(make_link(stats[l], mats[l], tue.ap[l], c));
        q_trace += mats[l].Q.trace().real();
        c_trace += mats[l].C.trace().real();
        ups += moments[l].upsilon;
        g_trace += tue.G_ap[l].trace().real();
    }
    const auto bs_stats = model.bs_link(uav);
    const auto bs_mats = estimation_matrices(bs_stats, p, c.kappa, c.sigma2);
    const auto bs_moments = link_moments(bs_stats.h_bar, bs_stats.R, bs_mats);
    const double bs_pickup = tue_pickup(bs_stats.h_bar, bs_stats.R, tue.G_bs);
    const OracleLink bs_link = make_link(bs_stats, bs_mats, tue.bs, c);

    const double tau_e = c.tau_e();
    const double he_cf_cf = he_cf(moments, c.p_d_cf, c.kappa, tau_e, c.tau_c);
    const double he_cf_tue = he_cf(moments, c.p_d_cf, c.kappa, tau_e, c.tau_c, pickups);
    const auto sc = he_sc(moments, c.p_d_sc(), c.kappa, tau_e, c.tau_c);
    const auto sc_tue = he_sc(moments, c.p_d_sc(), c.kappa, tau_e, c.tau_c, pickups, c.sc_tue_policy,
                              tue.strongest_ap);
    const int sc_tue_ap = c.sc_tue_policy == ScTueServingPolicy::EnergyServing ? sc_tue.best_ap : tue.strongest_ap;
    const double he_c = he_cellular(bs_moments, c.p_d_c, c.kappa, tau_e, c.tau_c);
    const double he_c_tue = he_cellular(bs_moments, c.p_d_c, c.kappa, tau_e, c.tau_c, bs_pickup);
    const auto terms = se_cf_terms(moments, p_u, c.kappa, c.sigma2, ui_terms, c.p_te_u);

    // Signal-level simulation, chunked with per-chunk streams.
    const long R = opt.realizations;
    const auto n_chunks = static_cast<std::size_t>((R + chunk_size - 1) / chunk_size);
    std::vector<ChunkSums> chunks(n_chunks);
    parallel_for(n_chunks, opt.threads,
                 [&](std::size_t ci)
                 {
                     const long n = std::min(chunk_size, R - static_cast<long>(ci) * chunk_size);
                     ChunkSums &s = chunks[ci];
                     s.ap.resize(links.size());
                     RandomStream common({opt.seed, 1, ci});
                     CVector eta_p(n), eta_d(n);
                     for (long j = 0; j < n; ++j)
                         eta_p(j) = common.complex_normal((1.0 - c.kappa) * p);
                     for (long j = 0; j < n; ++j)
                         eta_d(j) = common.complex_normal((1.0 - c.kappa) * p_u);

                     CVector A = CVector::Zero(n), ns = CVector::Zero(n), ui = CVector::Zero(n);
                     for (std::size_t l = 0; l < links.size(); ++l)
                     {
                         RandomStream rng({opt.seed, 2, ci, l});
                         if (!opt.common_pilot_distortion)
                             for (long j = 0; j < n; ++j)
                                 eta_p(j) = rng.complex_normal((1.0 - c.kappa) * p);
                         CMatrix G, Hte;
                         const CMatrix Gh = simulate_link(links[l], eta_p, p, c, rng, s.ap[l], &G, &Hte);
                         const CMatrix Nd = noise(Gh.rows(), n, c.sigma2, rng);
                         for (long j = 0; j < n; ++j)
                         {
                             A(j) += Gh.col(j).dot(G.col(j));
                             ns(j) += Gh.col(j).dot(Nd.col(j));
                             ui(j) += std::sqrt(c.p_te_u) * Gh.col(j).dot(Hte.col(j));
                         }
                     }
                     for (long j = 0; j < n; ++j)
                     {
                         s.A += A(j);
                         s.A2 += std::norm(A(j));
                         s.hi += std::norm(A(j) * eta_d(j));
                         s.ns += std::norm(ns(j));
                         s.ui += std::norm(ui(j));
                     }
                     RandomStream rng({opt.seed, 3, ci});
                     if (!opt.common_pilot_distortion)
                         for (long j = 0; j < n; ++j)
                             eta_p(j) = rng.complex_normal((1.0 - c.kappa) * p);
                     simulate_link(bs_link, eta_p, p, c, rng, s.bs, nullptr, nullptr);
                 });

    ChunkSums t;
    t.ap.resize(links.size());
    for (const auto &s : chunks)
    {
        for (std::size_t l = 0; l < links.size(); ++l)
            t.ap[l].add(s.ap[l]);
        t.bs.add(s.bs);
        t.A += s.A;
        t.A2 += s.A2;
        t.hi += s.hi;
        t.ns += s.ns;
        t.ui += s.ui;
    }

    const double inv = 1.0 / static_cast<double>(R);
    const double scale = tau_e / c.tau_c * c.kappa;
    double s_q = 0.0, s_c = 0.0, s_ups = 0.0, s_g = 0.0, s_he = 0.0, s_pick = 0.0;
    std::vector<double> per_ap_gain(links.size());
    for (std::size_t l = 0; l < links.size(); ++l)
    {
        const auto &a = t.ap[l];
        s_q += a.est_dev2 * inv;
        s_c += a.err2 * inv;
        s_ups += a.a2 * inv - std::norm(a.a * inv);
        s_g += a.te2 * inv;
        per_ap_gain[l] = a.a2 / a.ghat2;
        s_he += per_ap_gain[l];
        s_pick += a.pickup * inv;
    }
    const auto best = static_cast<std::size_t>(sc.best_ap);
    const auto best_tue = static_cast<std::size_t>(sc_tue.best_ap);
    const auto l_prime = static_cast<std::size_t>(sc_tue_ap);
    const double bs_gain = t.bs.a2 / t.bs.ghat2;

    const Complex EA = t.A * inv;
    const double s_ds = c.kappa * p_u * std::norm(EA);
    const double s_bu = c.kappa * p_u * (t.A2 * inv - std::norm(EA));
    const double s_hi = t.hi * inv;
    const double s_ns = t.ns * inv;
    const double s_ui = t.ui * inv;

    const double tol = opt.tolerance;
    std::vector<MonteCarloReport> out;
    out.push_back(make_report("est_q_trace", q_trace, s_q, R, tol));
    out.push_back(make_report("est_c_trace", c_trace, s_c, R, tol));
    out.push_back(make_report("upsilon", ups, s_ups, R, tol));
    out.push_back(make_report("tue_g_trace", g_trace, s_g, R, tol));
    out.push_back(make_report("tue_pickup", std::accumulate(pickups.begin(), pickups.end(), 0.0), s_pick, R, tol));
    out.push_back(make_report("he_cf", he_cf_cf, scale * c.p_d_cf * s_he, R, tol));
    out.push_back(make_report("he_sc", sc.p_he, scale * c.p_d_sc() * per_ap_gain[best], R, tol));
    out.push_back(make_report("he_cellular", he_c, scale * c.p_d_c * bs_gain, R, tol));
    out.push_back(make_report("he_cf_tue", he_cf_tue, scale * c.p_d_cf * (s_he + s_pick), R, tol));
    out.push_back(make_report("he_sc_tue", sc_tue.p_he,
                              scale * c.p_d_sc() * (per_ap_gain[best_tue] + t.ap[l_prime].pickup * inv), R, tol));
    out.push_back(make_report("he_cellular_tue", he_c_tue, scale * c.p_d_c * (bs_gain + t.bs.pickup * inv), R, tol));
    out.push_back(make_report("se_ds", terms.ds, s_ds, R, tol));
    out.push_back(make_report("se_bu", terms.bu, s_bu, R, tol));
    out.push_back(make_report("se_hi", terms.hi, s_hi, R, tol));
    out.push_back(make_report("se_ui", terms.ui, s_ui, R, tol));
    out.push_back(make_report("se_ns", terms.ns, s_ns, R, tol));
    out.push_back(make_report("se_sinr", terms.sinr(), s_ds / (s_bu + s_hi + s_ui + s_ns), R, tol));
    return out;
}

} // namespace cfuav
