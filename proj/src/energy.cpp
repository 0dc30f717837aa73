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

#include "cfuav/energy.hpp"

#include "cfuav/linalg.hpp"

namespace cfuav
{

double upsilon(const CVector &h_bar, const CMatrix &R, const CMatrix &Q)
{
    return trace_product(R, Q) + hermitian_form(h_bar, Q) + hermitian_form(h_bar, R);
}

LinkMoments link_moments(const CVector &h_bar, const CMatrix &R, const EstimationMatrices &mats)
{
    LinkMoments m;
    m.b = mats.Q.trace().real() + h_bar.squaredNorm();
    m.upsilon = upsilon(h_bar, R, mats.Q);
    return m;
}

double tue_pickup(const CVector &h_bar, const CMatrix &R, const CMatrix &G_te)
{
    return trace_product(G_te, R) + hermitian_form(h_bar, G_te);
}

double energy_gain(const LinkMoments &m)
{
    if (!(m.b > 0.0))
        throw DegenerateConfig("harvested energy: link with zero estimate power");
    return (m.upsilon + m.b * m.b) / m.b;
}

namespace
{
void check_tau(double tau_e, double tau_c)
{
    if (!(tau_c > 0.0) || tau_e < 0.0 || tau_e > tau_c)
        throw std::invalid_argument("harvested energy: need 0 <= tau_e <= tau_c");
}
} // namespace

double he_cf(std::span<const LinkMoments> links, double p_d, double kappa, double tau_e, double tau_c,
             std::span<const double> tue_pickup)
{
    check_tau(tau_e, tau_c);
    if (!tue_pickup.empty() && tue_pickup.size() != links.size())
        throw std::invalid_argument("he_cf: one pickup term per AP required");
    double sum = 0.0;
    for (std::size_t l = 0; l < links.size(); ++l)
    {
        sum += energy_gain(links[l]);
        if (!tue_pickup.empty())
            sum += tue_pickup[l];
    }
    return tau_e / tau_c * kappa * p_d * sum;
}

ScEnergy he_sc(std::span<const LinkMoments> links, double p_d_sc, double kappa, double tau_e, double tau_c,
               std::span<const double> tue_pickup, ScTueServingPolicy policy, int tue_ap)
{
    check_tau(tau_e, tau_c);
    if (links.empty())
        throw std::invalid_argument("he_sc: no APs");
    if (!tue_pickup.empty() && tue_pickup.size() != links.size())
        throw std::invalid_argument("he_sc: one pickup term per AP required");

    ScEnergy out;
    double best = energy_gain(links[0]);
    for (std::size_t l = 1; l < links.size(); ++l)
    {
        const double g = energy_gain(links[l]);
        if (g > best)
        {
            best = g;
            out.best_ap = static_cast<int>(l);
        }
    }
    if (!tue_pickup.empty())
    {
        int lp = out.best_ap;
        if (policy == ScTueServingPolicy::NearestToTue)
        {
            if (tue_ap < 0 || tue_ap >= static_cast<int>(links.size()))
                throw std::invalid_argument("he_sc: terrestrial user AP index out of range");
            lp = tue_ap;
        }
        // The l' term is the same for every candidate, so the argmax is unchanged.
        best += tue_pickup[static_cast<std::size_t>(lp)];
    }
    out.p_he = tau_e / tau_c * kappa * p_d_sc * best;
    return out;
}

double he_cellular(const LinkMoments &link, double p_d_c, double kappa, double tau_e, double tau_c,
                   double tue_pickup)
{
    check_tau(tau_e, tau_c);
    double g = energy_gain(link);
    if (tue_pickup >= 0.0)
        g += tue_pickup;
    return tau_e / tau_c * kappa * p_d_c * g;
}

SlotEnergyState advance_energy(double p_he, double tau_c, double tau_p, double tau_e)
{
    if (!(tau_c - tau_p - tau_e > 0.0))
        throw DegenerateConfig("advance_energy: no uplink data phase (tau_e >= tau_c - tau_p)");
    if (p_he < 0.0)
        throw std::invalid_argument("advance_energy: negative harvested energy");
    SlotEnergyState s;
    s.p_he = p_he;
    s.partial = tau_p / (tau_c - tau_e);
    s.p_u = tau_c / (tau_c - tau_p - tau_e) * (1.0 - s.partial) * p_he;
    s.p_pilot_next = tau_c / tau_p * s.partial * p_he;
    return s;
}

} // namespace cfuav
