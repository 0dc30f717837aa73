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

#include "cfuav/spectral.hpp"

#include "cfuav/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace cfuav
{

double SeTermBreakdown::sinr() const
{
    const double den = bu + hi + ui + ns;
    if (ds == 0.0)
        return 0.0;
    if (!(den > 0.0))
        throw DegenerateConfig("SINR: zero interference plus noise");
    return ds / den;
}

double ui_term(const CVector &h_bar, const CMatrix &Q, const CMatrix &R_te)
{
    return trace_product(R_te, Q) + hermitian_form(h_bar, R_te);
}

SeTermBreakdown se_cf_terms(std::span<const LinkMoments> links, double p_u, double kappa, double sigma2,
                            std::span<const double> ui_terms, double p_te_u)
{
    if (!ui_terms.empty() && ui_terms.size() != links.size())
        throw std::invalid_argument("se_cf_terms: one interference term per AP required");
    double sum_b = 0.0;
    double sum_ups = 0.0;
    for (const auto &m : links)
    {
        sum_b += m.b;
        sum_ups += m.upsilon;
    }
    SeTermBreakdown t;
    t.ds = kappa * p_u * sum_b * sum_b;
    t.bu = kappa * p_u * sum_ups;
    t.hi = (1.0 - kappa) * p_u * (sum_ups + sum_b * sum_b);
    if (!ui_terms.empty())
    {
        double sum_ui = 0.0;
        for (double u : ui_terms)
            sum_ui += u;
        t.ui = p_te_u * sum_ui;
    }
    t.ns = sigma2 * sum_b;
    return t;
}

CfSe se_cf_closed_form(std::span<const LinkMoments> links, double p_u, double kappa, double sigma2, double prelog,
                       std::span<const double> ui_terms, double p_te_u)
{
    if (p_u < 0.0)
        throw std::invalid_argument("se_cf_closed_form: negative uplink power");
    CfSe out;
    out.terms = se_cf_terms(links, p_u, kappa, sigma2, ui_terms, p_te_u);
    out.sinr = out.terms.sinr();
    out.se = prelog * std::log2(1.0 + out.sinr);
    return out;
}

double mr_sinr(const CVector &g_hat, const CMatrix &C, double p_u, double kappa, double sigma2, const CMatrix *R_te,
               double p_te_u)
{
    const double gg = g_hat.squaredNorm();
    const double signal = p_u * gg * gg;
    if (signal == 0.0)
        return 0.0;
    double quad = p_u * hermitian_form(g_hat, C) + sigma2 * gg;
    if (R_te)
        quad += p_te_u * hermitian_form(g_hat, *R_te);
    return kappa * signal / ((1.0 - kappa) * signal + quad);
}

ExpectedLog expected_log2_mr(const MrLink &link, double p_u, double kappa, double sigma2, int draws,
                             RandomStream &rng, double p_te_u)
{
    if (draws < 1)
        throw std::invalid_argument("expected_log2_mr: draws must be at least 1");
    const CVector &h = *link.h_bar;

    CMatrix A = p_u * *link.C;
    A.diagonal().array() += sigma2;
    if (link.R_te)
        A += p_te_u * *link.R_te;
    const ChannelSampler sampler(h, *link.Q);

    constexpr Eigen::Index chunk = 512;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (Eigen::Index done = 0; done < draws; done += chunk)
    {
        const Eigen::Index m = std::min<Eigen::Index>(chunk, draws - done);
        const CMatrix G = sampler.draw_batch(m, rng);
        const CMatrix AG = A * G;
        for (Eigen::Index c = 0; c < m; ++c)
        {
            const double gg = G.col(c).squaredNorm();
            const double signal = p_u * gg * gg;
            double sinr = 0.0;
            if (signal > 0.0)
            {
                const double quad = G.col(c).dot(AG.col(c)).real();
                sinr = kappa * signal / ((1.0 - kappa) * signal + quad);
            }
            const double v = std::log2(1.0 + sinr);
            sum += v;
            sum_sq += v * v;
        }
    }
    ExpectedLog out;
    out.mean = sum / draws;
    if (draws > 1)
    {
        const double var = std::max(0.0, (sum_sq - draws * out.mean * out.mean) / (draws - 1));
        out.std_error = std::sqrt(var / draws);
    }
    return out;
}

McSe se_sc(std::span<const MrLink> links, double p_u, double kappa, double sigma2, double prelog, int draws,
           RandomStream &rng, double p_te_u)
{
    if (links.empty())
        throw std::invalid_argument("se_sc: no APs");
    McSe out;
    double best = -1.0;
    double best_err = 0.0;
    for (std::size_t l = 0; l < links.size(); ++l)
    {
        const auto e = expected_log2_mr(links[l], p_u, kappa, sigma2, draws, rng, p_te_u);
        if (e.mean > best)
        {
            best = e.mean;
            best_err = e.std_error;
            out.best_ap = static_cast<int>(l);
        }
    }
    out.se = prelog * best;
    out.std_error = prelog * best_err;
    return out;
}

McSe se_cellular(const MrLink &link, double p_u, double kappa, double sigma2, double prelog, int draws,
                 RandomStream &rng, double p_te_u)
{
    const auto e = expected_log2_mr(link, p_u, kappa, sigma2, draws, rng, p_te_u);
    McSe out;
    out.se = prelog * e.mean;
    out.std_error = prelog * e.std_error;
    return out;
}

LsfdVectors lsfd_vectors(std::span<const LinkMoments> links, std::span<const double> ui_terms)
{
    if (!ui_terms.empty() && ui_terms.size() != links.size())
        throw std::invalid_argument("lsfd_vectors: one interference term per AP required");
    const auto L = static_cast<Eigen::Index>(links.size());
    LsfdVectors v;
    v.b.resize(L);
    v.gamma.resize(L);
    v.t = RVector::Zero(L);
    for (Eigen::Index l = 0; l < L; ++l)
    {
        v.b(l) = links[static_cast<std::size_t>(l)].b;
        v.gamma(l) = links[static_cast<std::size_t>(l)].upsilon;
        if (!ui_terms.empty())
            v.t(l) = ui_terms[static_cast<std::size_t>(l)];
    }
    v.lambda = v.b;
    return v;
}

double lsfd_sinr(const LsfdVectors &v, double p_u, double p_te_u, double kappa, double sigma2)
{
    double s = 0.0;
    for (Eigen::Index l = 0; l < v.b.size(); ++l)
    {
        const double b = v.b(l);
        if (b == 0.0)
            continue;
        const double d = p_u * v.gamma(l) + p_te_u * v.t(l) + sigma2 * v.lambda(l);
        if (!(d > 0.0))
            throw DegenerateConfig("lsfd_sinr: singular decoding system");
        s += b * b / d;
    }
    const double a = (1.0 - kappa) * p_u;
    return kappa * p_u * s / (1.0 + a * s);
}

double se_lsfd(const LsfdVectors &v, double p_u, double p_te_u, double kappa, double sigma2, double prelog)
{
    return prelog * std::log2(1.0 + lsfd_sinr(v, p_u, p_te_u, kappa, sigma2));
}

ComplexityCounts complexity_count(int K, int L, int N, double tau_c, double tau_p, double tau_e)
{
    if (K < 1 || L < 1 || N < 1)
        throw std::invalid_argument("complexity_count: K, L, N must be at least 1");
    const double KL = static_cast<double>(K) * L;
    const double n = N;
    ComplexityCounts c;
    c.statistics = KL * (4.0 * n * n * n - n) / 3.0;
    c.estimation = KL * n * n;
    c.beamforming = KL * n;
    c.energy_tx = KL * tau_e * n;
    c.combining = KL * (tau_c - tau_p - tau_e) * n;
    return c;
}

} // namespace cfuav
