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

#include "cfuav/channel.hpp"

#include "cfuav/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace cfuav
{

double path_loss(const Position &uav, const Position &ap, double H, double beta0)
{
    const double dx = uav.x - ap.x;
    const double dy = uav.y - ap.y;
    const double d2 = dx * dx + dy * dy + H * H;
    if (!(d2 > 0.0))
        throw std::domain_error("path_loss: zero link distance");
    return beta0 / d2;
}

double rician_factor(double distance_3d)
{
    if (distance_3d < 0.0)
        throw std::invalid_argument("rician_factor: negative distance");
    return db_to_linear(13.0 - 0.03 * distance_3d);
}

LargeScaleSplit split_large_scale(double zeta, double K)
{
    if (zeta < 0.0 || K < 0.0)
        throw std::invalid_argument("split_large_scale: zeta and K must be non-negative");
    if (std::isinf(K))
        return {zeta, 0.0};
    return {std::sqrt(K / (K + 1.0)) * zeta, std::sqrt(1.0 / (K + 1.0)) * zeta};
}

CVector los_steering(double phi_rad, int n, double d_H, double beta_los)
{
    if (n < 1)
        throw std::invalid_argument("los_steering: n must be at least 1");
    const double amp = std::sqrt(beta_los);
    const double step = 2.0 * pi * d_H * std::sin(phi_rad);
    CVector h(n);
    for (int k = 0; k < n; ++k)
        h(k) = std::polar(amp, step * k);
    return h;
}

CMatrix nlos_correlation(double phi_rad, int n, double asd_deg, std::span<const double> cluster_offsets_rad,
                         double beta_nlos, double d_H)
{
    if (n < 1)
        throw std::invalid_argument("nlos_correlation: n must be at least 1");
    if (cluster_offsets_rad.empty())
        throw std::invalid_argument("nlos_correlation: at least one cluster required");
    if (asd_deg < 0.0)
        throw std::invalid_argument("nlos_correlation: negative angular spread");

    const double sigma = asd_deg * pi / 180.0;
    const double scale = beta_nlos / static_cast<double>(cluster_offsets_rad.size());
    std::vector<Complex> lag(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    lag[0] = beta_nlos;
    for (double offset : cluster_offsets_rad)
    {
        const double s = std::sin(phi_rad + offset);
        const double c = std::cos(phi_rad + offset);
        for (int d = 1; d < n; ++d)
        {
            const double w = 2.0 * pi * d_H * d;
            const double spread = w * c * sigma;
            lag[static_cast<std::size_t>(d)] += std::polar(scale * std::exp(-0.5 * spread * spread), w * s);
        }
    }

    CMatrix R(n, n);
    for (int s = 0; s < n; ++s)
    {
        R(s, s) = beta_nlos;
        for (int m = 0; m < s; ++m)
        {
            R(s, m) = lag[static_cast<std::size_t>(s - m)];
            R(m, s) = std::conj(R(s, m));
        }
    }
    return R;
}

std::vector<double> draw_cluster_offsets(int n_clusters, double spread_deg, RandomStream &rng)
{
    if (n_clusters < 1)
        throw std::invalid_argument("draw_cluster_offsets: n_clusters must be at least 1");
    const double spread = spread_deg * pi / 180.0;
    std::vector<double> out(static_cast<std::size_t>(n_clusters));
    for (auto &o : out)
        o = rng.uniform(-spread, spread);
    return out;
}

CMatrix nlos_correlation(double phi_rad, int n, double asd_deg, int n_clusters, double beta_nlos, RandomStream &rng,
                         double spread_deg, double d_H)
{
    const auto offsets = draw_cluster_offsets(n_clusters, spread_deg, rng);
    return nlos_correlation(phi_rad, n, asd_deg, offsets, beta_nlos, d_H);
}

namespace tue_model
{
double loss_constant_db()
{
    const double lf = std::log10(carrier_mhz);
    return 46.3 + 33.9 * lf - 13.82 * std::log10(ap_height_m) - (1.1 * lf - 0.7) * ue_height_m + (1.56 * lf - 0.8);
}
} // namespace tue_model

double tue_path_loss_km(double d)
{
    if (!(d >= 0.0) || !std::isfinite(d))
        throw std::invalid_argument("tue_path_loss: distance must be finite and non-negative");
    using namespace tue_model;
    const double Lc = loss_constant_db();
    double gain_db;
    if (d > d1_km)
        gain_db = -Lc - 35.0 * std::log10(d);
    else if (d > d0_km)
        gain_db = -Lc - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d);
    else
        gain_db = -Lc - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d0_km);
    return db_to_linear(gain_db);
}

double tue_path_loss(const Position &tue, const Position &ap)
{
    return tue_path_loss_km(distance(tue, ap) / 1000.0);
}

namespace
{
double azimuth(const Position &from, const Position &to)
{
    return std::atan2(to.y - from.y, to.x - from.x);
}
} // namespace

LinkStatistics uav_link(const Position &uav, const Position &array, int n, const ScenarioConfig &config,
                        std::span<const double> cluster_offsets_rad)
{
    LinkStatistics s;
    s.zeta = path_loss(uav, array, config.H, config.beta0);
    const double d3 = std::sqrt(std::pow(distance(uav, array), 2) + config.H * config.H);
    s.K_factor = rician_factor(d3);
    const auto split = split_large_scale(s.zeta, s.K_factor);
    s.beta_los = split.beta_los;
    s.beta_nlos = split.beta_nlos;
    s.phi = azimuth(array, uav);
    s.h_bar = los_steering(s.phi, n, config.d_H, s.beta_los);
    s.R = nlos_correlation(s.phi, n, config.asd_deg, cluster_offsets_rad, s.beta_nlos, config.d_H);
    return s;
}

TueLinkStatistics tue_link(const Position &tue, const Position &array, int n, const ScenarioConfig &config,
                           std::span<const double> cluster_offsets_rad)
{
    TueLinkStatistics s;
    s.beta_te = tue_path_loss(tue, array);
    s.R_te = nlos_correlation(azimuth(array, tue), n, config.asd_deg, cluster_offsets_rad, s.beta_te, config.d_H);
    return s;
}

ChannelSampler::ChannelSampler(CVector mean, const CMatrix &R) : mean_(std::move(mean)), sqrt_(sqrtm_psd(R))
{
    if (mean_.size() != R.rows())
        throw std::invalid_argument("ChannelSampler: dimension mismatch");
}

CVector ChannelSampler::draw(RandomStream &rng) const
{
    return mean_ + sqrt_ * rng.complex_normal_vector(mean_.size());
}

CMatrix ChannelSampler::draw_batch(Eigen::Index count, RandomStream &rng) const
{
    CMatrix g = sqrt_ * rng.complex_normal_matrix(mean_.size(), count);
    g.colwise() += mean_;
    return g;
}

CVector draw_channel(const LinkStatistics &stats, RandomStream &rng)
{
    return ChannelSampler(stats.h_bar, stats.R).draw(rng);
}

} // namespace cfuav
