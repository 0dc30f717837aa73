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

#ifndef CFUAV_SPECTRAL_HPP
#define CFUAV_SPECTRAL_HPP

#include "cfuav/energy.hpp"
#include "cfuav/random.hpp"
#include "cfuav/types.hpp"

#include <span>
#include <vector>

namespace cfuav
{

/// Second moments of the combined uplink signal: desired signal,
/// beamforming uncertainty, hardware impairment, terrestrial user
/// interference and noise.
struct SeTermBreakdown
{
    double ds = 0.0;
    double bu = 0.0;
    double hi = 0.0;
    double ui = 0.0;
    double ns = 0.0;

    double sinr() const;
};

/// Interference pickup of one AP from the terrestrial user's data:
/// tr(R_te Q) + h^H R_te h.
double ui_term(const CVector &h_bar, const CMatrix &Q, const CMatrix &R_te);

/// Terms of the cell-free matched-filter bound. `ui_terms` holds one
/// ui_term per AP and is empty without a terrestrial user.
///   ds = kappa p_u (sum b)^2
///   bu = kappa p_u sum Upsilon
///   hi = (1 - kappa) p_u (sum Upsilon + (sum b)^2)
///   ui = p_te_u sum ui_l
///   ns = sigma2 sum b
SeTermBreakdown se_cf_terms(std::span<const LinkMoments> links, double p_u, double kappa, double sigma2,
                            std::span<const double> ui_terms = {}, double p_te_u = 0.0);

struct CfSe
{
    double se = 0.0;
    double sinr = 0.0;
    SeTermBreakdown terms;
};

/// prelog * log2(1 + SINR) with the matched-filter terms above.
CfSe se_cf_closed_form(std::span<const LinkMoments> links, double p_u, double kappa, double sigma2, double prelog,
                       std::span<const double> ui_terms = {}, double p_te_u = 0.0);

/// Instantaneous MR SINR for one estimate g_hat:
///   kappa p_u |g_hat|^4 / ((1 - kappa) p_u |g_hat|^4 + g_hat^H (p_u C + p_te_u R_te + sigma2 I) g_hat)
/// `R_te` may be null.
double mr_sinr(const CVector &g_hat, const CMatrix &C, double p_u, double kappa, double sigma2,
               const CMatrix *R_te = nullptr, double p_te_u = 0.0);

/// Sample mean of log2(1 + SINR) over g_hat ~ CN(h_bar, Q) with its
/// standard error.
struct ExpectedLog
{
    double mean = 0.0;
    double std_error = 0.0;
};

/// Inputs of one MR link in the Monte Carlo bounds.
struct MrLink
{
    const CVector *h_bar = nullptr;
    const CMatrix *Q = nullptr;
    const CMatrix *C = nullptr;
    const CMatrix *R_te = nullptr; // null without a terrestrial user
};

ExpectedLog expected_log2_mr(const MrLink &link, double p_u, double kappa, double sigma2, int draws,
                             RandomStream &rng, double p_te_u = 0.0);

struct McSe
{
    double se = 0.0;
    double std_error = 0.0;
    int best_ap = 0;
};

/// Small-cell bound prelog * max_l E{log2(1 + SINR_l)}; the max is taken over
/// the per-AP sample means. Ties go to the lowest index.
McSe se_sc(std::span<const MrLink> links, double p_u, double kappa, double sigma2, double prelog, int draws,
           RandomStream &rng, double p_te_u = 0.0);

/// Cellular bound prelog * E{log2(1 + SINR)} on the stacked LN link.
McSe se_cellular(const MrLink &link, double p_u, double kappa, double sigma2, double prelog, int draws,
                 RandomStream &rng, double p_te_u = 0.0);

/// Large-scale fading decoding statistics; the L x L matrices are diagonal
/// and stored as vectors.
struct LsfdVectors
{
    RVector b;
    RVector gamma;
    RVector t;
    RVector lambda;
};

LsfdVectors lsfd_vectors(std::span<const LinkMoments> links, std::span<const double> ui_terms = {});

/// kappa p_u b^T (p_u Gamma + (1 - kappa) p_u b b^T + p_te_u T + sigma2 Lambda)^-1 b
///
/// The matrix is diagonal plus rank one, so the quadratic form is evaluated
/// through Sherman-Morrison: with s = b^T D^-1 b, the value is s / (1 + a s).
double lsfd_sinr(const LsfdVectors &v, double p_u, double p_te_u, double kappa, double sigma2);

double se_lsfd(const LsfdVectors &v, double p_u, double p_te_u, double kappa, double sigma2, double prelog);

/// Complex multiplications per coherence block for K users.
struct ComplexityCounts
{
    double statistics = 0.0;  // K L (4 N^3 - N) / 3
    double estimation = 0.0;  // K L N^2
    double beamforming = 0.0; // K L N
    double energy_tx = 0.0;   // K L tau_e N
    double combining = 0.0;   // K L (tau_c - tau_p - tau_e) N

    double total() const { return statistics + estimation + beamforming + energy_tx + combining; }
};

ComplexityCounts complexity_count(int K, int L, int N, double tau_c, double tau_p, double tau_e);

} // namespace cfuav

#endif
