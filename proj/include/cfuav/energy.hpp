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

#ifndef CFUAV_ENERGY_HPP
#define CFUAV_ENERGY_HPP

#include "cfuav/estimation.hpp"
#include "cfuav/scenario.hpp"
#include "cfuav/types.hpp"

#include <span>

namespace cfuav
{

/// Upsilon = tr(R Q) + h^H Q h + h^H R h, the variance of g_hat^H g.
double upsilon(const CVector &h_bar, const CMatrix &R, const CMatrix &Q);

/// Per-link second-order moments shared by the energy and SE expressions.
///   b       = tr(Q) + |h|^2      (mean of g_hat^H g)
///   upsilon = see above
struct LinkMoments
{
    double b = 0.0;
    double upsilon = 0.0;
};

LinkMoments link_moments(const CVector &h_bar, const CMatrix &R, const EstimationMatrices &mats);

/// Received power picked up from the terrestrial user's MR precoding:
/// tr(G_te R) + h^H G_te h.
double tue_pickup(const CVector &h_bar, const CMatrix &R, const CMatrix &G_te);

/// (Upsilon + b^2) / b: E{|g^H g_hat|^2} / E{|g_hat|^2} for one link.
/// Throws DegenerateConfig when b = 0.
double energy_gain(const LinkMoments &m);

/// Cell-free harvested energy
///   (tau_e/tau_c) kappa p_d sum_l [(Upsilon_l + b_l^2)/b_l + pickup_l]
/// `tue_pickup` is empty without a terrestrial user.
double he_cf(std::span<const LinkMoments> links, double p_d, double kappa, double tau_e, double tau_c,
             std::span<const double> tue_pickup = {});

struct ScEnergy
{
    double p_he = 0.0;
    int best_ap = 0;
};

/// Small-cell harvested energy: the best single AP with power p_d_sc. Ties go
/// to the lowest index. With a terrestrial user, the pickup of its serving
/// AP l' is added inside the max; l' is the energy-serving AP or `tue_ap`
/// depending on `policy`.
ScEnergy he_sc(std::span<const LinkMoments> links, double p_d_sc, double kappa, double tau_e, double tau_c,
               std::span<const double> tue_pickup = {},
               ScTueServingPolicy policy = ScTueServingPolicy::EnergyServing, int tue_ap = -1);

/// Cellular harvested energy from the LN-antenna link; `tue_pickup` < 0 means
/// no terrestrial user.
double he_cellular(const LinkMoments &link, double p_d_c, double kappa, double tau_e, double tau_c,
                   double tue_pickup = -1.0);

/// Energy bookkeeping of one coherence block.
struct SlotEnergyState
{
    double p_he = 0.0;
    double p_u = 0.0;
    double p_pilot_next = 0.0;
    double partial = 0.0; // tau_p / (tau_c - tau_e)
};

/// Splits p_he into uplink data power and next pilot power. Throws
/// DegenerateConfig when tau_c - tau_p - tau_e <= 0 (no data phase).
SlotEnergyState advance_energy(double p_he, double tau_c, double tau_p, double tau_e);

} // namespace cfuav

#endif
