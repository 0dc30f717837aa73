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

#ifndef CFUAV_CHANNEL_HPP
#define CFUAV_CHANNEL_HPP

#include "cfuav/random.hpp"
#include "cfuav/scenario.hpp"
#include "cfuav/types.hpp"

#include <span>
#include <vector>

namespace cfuav
{

/// Large-scale gain beta0 / (horizontal distance^2 + H^2).
/// Throws std::domain_error when H = 0 and the points coincide.
double path_loss(const Position &uav, const Position &ap, double H, double beta0);

/// Rician factor 10^((13 - 0.03 d) / 10) for a 3D link distance d in meters.
double rician_factor(double distance_3d);

struct LargeScaleSplit
{
    double beta_los = 0.0;
    double beta_nlos = 0.0;
};

/// beta_los = sqrt(K/(K+1)) zeta, beta_nlos = sqrt(1/(K+1)) zeta.
/// The two parts do not add up to zeta; the rule is kept as published.
LargeScaleSplit split_large_scale(double zeta, double K);

/// ULA line-of-sight vector sqrt(beta_los) exp(j 2 pi d_H k sin(phi)), k = 0..n-1.
CVector los_steering(double phi_rad, int n, double d_H, double beta_los);

/// Gaussian local scattering correlation with explicit cluster AoAs
/// phi + offset_k:
///
///   [R]_{s,m} = beta_nlos / K * sum_k exp(j 2 pi d_H (s-m) sin(phi_k)
///                                         - sigma^2/2 (2 pi d_H (s-m) cos(phi_k))^2)
///
/// The matrix is Toeplitz, so one value per lag is computed and mirrored.
CMatrix nlos_correlation(double phi_rad, int n, double asd_deg, std::span<const double> cluster_offsets_rad,
                         double beta_nlos, double d_H = 0.5);

/// Cluster AoA offsets drawn uniformly in [-spread, +spread].
std::vector<double> draw_cluster_offsets(int n_clusters, double spread_deg, RandomStream &rng);

/// Same as above with freshly drawn cluster offsets.
CMatrix nlos_correlation(double phi_rad, int n, double asd_deg, int n_clusters, double beta_nlos, RandomStream &rng,
                         double spread_deg = 40.0, double d_H = 0.5);

// Three-slope model for the terrestrial user, distance in km:
//
//   gain_dB = -Lc - 35 log10(d)                       d > d1
//           = -Lc - 15 log10(d1) - 20 log10(d)        d0 < d <= d1
//           = -Lc - 15 log10(d1) - 20 log10(d0)       d <= d0
//
//   Lc = 46.3 + 33.9 log10(f) - 13.82 log10(h_AP) - (1.1 log10(f) - 0.7) h_u
//        + (1.56 log10(f) - 0.8)
//
// with f = 2000 MHz, h_AP = 15 m, h_u = 1.65 m, d0 = 10 m, d1 = 50 m, which
// gives Lc = 141.4646 dB and a gain of 10^(-Lc/10) at 1 km.
namespace tue_model
{
inline constexpr double carrier_mhz = 2000.0;
inline constexpr double ap_height_m = 15.0;
inline constexpr double ue_height_m = 1.65;
inline constexpr double d0_km = 0.01;
inline constexpr double d1_km = 0.05;
double loss_constant_db();
} // namespace tue_model

/// Three-slope gain (linear) between a terrestrial user and an AP.
double tue_path_loss(const Position &tue, const Position &ap);
double tue_path_loss_km(double distance_km);

struct LinkStatistics
{
    double zeta = 0.0;
    double K_factor = 0.0;
    double beta_los = 0.0;
    double beta_nlos = 0.0;
    double phi = 0.0; // azimuth from the array to the UAV
    CVector h_bar;
    CMatrix R;
};

struct TueLinkStatistics
{
    double beta_te = 0.0;
    CMatrix R_te;
};

/// Statistics of the link between the UAV at `uav` and an `n`-antenna ULA at
/// `array` (an AP with n = N, or the cellular BS with n = LN).
LinkStatistics uav_link(const Position &uav, const Position &array, int n, const ScenarioConfig &config,
                        std::span<const double> cluster_offsets_rad);

/// Zero-mean statistics of the terrestrial user link towards an n-antenna array.
TueLinkStatistics tue_link(const Position &tue, const Position &array, int n, const ScenarioConfig &config,
                           std::span<const double> cluster_offsets_rad);

/// Draws g = mean + R^{1/2} w, w ~ CN(0, I). The square root is computed once.
class ChannelSampler
{
public:
    ChannelSampler(CVector mean, const CMatrix &R);

    CVector draw(RandomStream &rng) const;

    /// `count` draws as the columns of one matrix.
    CMatrix draw_batch(Eigen::Index count, RandomStream &rng) const;

    const CVector &mean() const { return mean_; }
    const CMatrix &sqrt_cov() const { return sqrt_; }

private:
    CVector mean_;
    CMatrix sqrt_;
};

/// One realization of a link.
CVector draw_channel(const LinkStatistics &stats, RandomStream &rng);

} // namespace cfuav

#endif
