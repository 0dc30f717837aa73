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

#ifndef CFUAV_ESTIMATION_HPP
#define CFUAV_ESTIMATION_HPP

#include "cfuav/channel.hpp"
#include "cfuav/random.hpp"
#include "cfuav/types.hpp"

namespace cfuav
{

/// LMMSE quantities of one UAV link for pilot power p:
///
///   Psi    = (p R + (1 - kappa) p h h^H + sigma2 I)^-1
///   Q      = kappa p R Psi R        (covariance of the estimate)
///   C      = R - Q                  (covariance of the error)
///   filter = sqrt(kappa p) R Psi    (applied to the pilot innovation)
struct EstimationMatrices
{
    CMatrix Psi;
    CMatrix Q;
    CMatrix C;
    CMatrix filter;
};

/// Throws DegenerateConfig when the system matrix is singular (sigma2 = 0
/// with a rank deficient R).
EstimationMatrices estimation_matrices(const CVector &h_bar, const CMatrix &R, double p, double kappa,
                                       double sigma2);

inline EstimationMatrices estimation_matrices(const LinkStatistics &stats, double p, double kappa, double sigma2)
{
    return estimation_matrices(stats.h_bar, stats.R, p, kappa, sigma2);
}

/// g_hat = h_bar + filter (z - sqrt(kappa p) h_bar)
CVector lmmse_estimate(const CVector &h_bar, const EstimationMatrices &mats, const CVector &z, double p,
                       double kappa);

/// Received single-symbol pilot z = sqrt(kappa p) g + eta g + n with
/// eta ~ CN(0, (1 - kappa) p) and n ~ CN(0, sigma2 I).
CVector simulate_pilot(const CVector &g, double p, double kappa, double sigma2, RandomStream &rng);

/// Terrestrial user MMSE estimate covariance
/// G_te = p_te R_te (p_te R_te + sigma2 I)^-1 R_te.
CMatrix tue_estimation(const CMatrix &R_te, double p_te, double sigma2);

/// Filter sqrt(p_te) R_te (p_te R_te + sigma2 I)^-1 producing the terrestrial
/// user estimate from its received pilot.
CMatrix tue_estimation_filter(const CMatrix &R_te, double p_te, double sigma2);

} // namespace cfuav

#endif
