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

#include <catch_amalgamated.hpp>

#include "cfuav/channel.hpp"
#include "cfuav/estimation.hpp"
#include "cfuav/linalg.hpp"

#include <cmath>

using namespace cfuav;
using Catch::Approx;

namespace
{
CMatrix random_psd(int n, RandomStream &rng, double scale = 1.0)
{
    const CMatrix A = rng.complex_normal_matrix(n, n);
    return scale * A * A.adjoint() / static_cast<double>(n);
}
} // namespace

TEST_CASE("Estimation - scalar LMMSE")
{
    CVector h = CVector::Zero(1);
    CMatrix R = CMatrix::Ones(1, 1);
    const auto m = estimation_matrices(h, R, 1.0, 1.0, 1.0);
    CHECK(m.Q(0, 0).real() == Approx(0.5));
    CHECK(m.C(0, 0).real() == Approx(0.5));
    CHECK(m.Psi(0, 0).real() == Approx(0.5));
}

TEST_CASE("Estimation - limits")
{
    RandomStream rng(3);
    const CMatrix R = random_psd(3, rng);
    const CVector h = rng.complex_normal_vector(3);

    const auto k0 = estimation_matrices(h, R, 2.0, 0.0, 0.1);
    CHECK(k0.Q.norm() == 0.0);
    CHECK((k0.C - R).norm() == 0.0);

    const auto big = estimation_matrices(h, R, 1e9, 1.0, 1e-3);
    CHECK((big.Q - R).norm() / R.norm() < 1e-6);

    const auto m = estimation_matrices(h, R, 0.7, 0.9, 0.2);
    CHECK((m.Q + m.C - R).norm() / R.norm() < 1e-9);
    CHECK(min_eigenvalue(m.Q) >= -1e-10 * m.Q.trace().real());
    CHECK(min_eigenvalue(m.C) >= -1e-10 * R.trace().real());

    CHECK_THROWS_AS(estimation_matrices(h, CMatrix::Zero(3, 3), 1.0, 1.0, 0.0), DegenerateConfig);
}

TEST_CASE("Estimation - trace of Q is monotone in power and quality")
{
    RandomStream rng(8);
    const CMatrix R = random_psd(2, rng);
    const CVector h = rng.complex_normal_vector(2);
    double prev = -1.0;
    for (double p = 0.0; p < 50.0; p = 1.5 * p + 0.01)
    {
        const double t = estimation_matrices(h, R, p, 0.95, 0.3).Q.trace().real();
        CHECK(t >= prev - 1e-15);
        prev = t;
    }
    prev = -1.0;
    for (double k = 0.0; k <= 1.0; k += 0.05)
    {
        const double t = estimation_matrices(h, R, 1.0, k, 0.3).Q.trace().real();
        CHECK(t >= prev - 1e-15);
        prev = t;
    }
}

TEST_CASE("Estimation - estimate is an affine map of the pilot")
{
    RandomStream rng(1);
    const CMatrix R = random_psd(2, rng);
    const CVector h = rng.complex_normal_vector(2);
    const double p = 0.8, kappa = 0.9;
    const auto m = estimation_matrices(h, R, p, kappa, 0.5);
    const CVector zbar = std::sqrt(kappa * p) * h;
    CHECK((lmmse_estimate(h, m, zbar, p, kappa) - h).norm() < 1e-14);
    const auto m0 = estimation_matrices(h, R, 0.0, kappa, 0.5);
    CHECK((lmmse_estimate(h, m0, rng.complex_normal_vector(2), 0.0, kappa) - h).norm() == 0.0);
}

TEST_CASE("Pilot model")
{
    RandomStream rng(4);
    const CVector g = rng.complex_normal_vector(3);
    const CVector z = simulate_pilot(g, 2.0, 1.0, 0.0, rng);
    CHECK((z - std::sqrt(2.0) * g).norm() < 1e-14);
    const CVector n = simulate_pilot(g, 0.0, 0.7, 0.0, rng);
    CHECK(n.norm() == 0.0);

    const CVector h = los_steering(0.2, 2, 0.5, 1.0);
    const auto R = nlos_correlation(0.2, 2, 10.0, 6, 0.4, rng);
    const ChannelSampler s(h, R);
    const double p = 1.3, kappa = 0.9, sigma2 = 0.2;
    const int trials = 100000;
    CVector acc = CVector::Zero(2);
    for (int i = 0; i < trials; ++i)
        acc += simulate_pilot(s.draw(rng), p, kappa, sigma2, rng);
    acc /= static_cast<double>(trials);
    const CVector expect = std::sqrt(kappa * p) * h;
    // Per-component variance of z: p R_kk + (1 - kappa) p |h_k|^2 + sigma2.
    for (int k = 0; k < 2; ++k)
    {
        const double var = p * R(k, k).real() + (1 - kappa) * p * std::norm(h(k)) + sigma2;
        CHECK(std::abs(acc(k) - expect(k)) < 3.0 * std::sqrt(2.0 * var / trials));
    }
}

// Pilot-level oracle: simulate channel, pilot and estimate, and compare
// sample statistics with the estimation matrices.
TEST_CASE("Estimation - pilot simulation oracle")
{
    RandomStream rng(21);
    const int n = 2;
    const CVector h = los_steering(-0.6, n, 0.5, 0.8);
    const auto R = nlos_correlation(-0.6, n, 10.0, 6, 0.6, rng);
    const double p = 0.9, kappa = 0.9, sigma2 = 0.3;
    const auto m = estimation_matrices(h, R, p, kappa, sigma2);
    const ChannelSampler s(h, R);

    const int trials = 200000;
    CVector mean_hat = CVector::Zero(n);
    CMatrix second = CMatrix::Zero(n, n);
    double err = 0.0;
    Complex cross = 0.0;
    double norm_a = 0.0, norm_b = 0.0;
    for (int i = 0; i < trials; ++i)
    {
        const CVector g = s.draw(rng);
        const CVector ghat = lmmse_estimate(h, m, simulate_pilot(g, p, kappa, sigma2, rng), p, kappa);
        mean_hat += ghat;
        second += ghat * ghat.adjoint();
        const CVector e = g - ghat;
        err += e.squaredNorm();
        const CVector a = ghat - h;
        cross += a.dot(e);
        norm_a += a.squaredNorm();
        norm_b += e.squaredNorm();
    }
    mean_hat /= static_cast<double>(trials);
    const CMatrix cov = second / static_cast<double>(trials) - mean_hat * mean_hat.adjoint();
    CHECK((cov - m.Q).norm() / m.Q.norm() < 0.02);
    CHECK(err / trials == Approx(m.C.trace().real()).epsilon(0.02));
    CHECK(std::abs(cross) / std::sqrt(norm_a * norm_b) < 0.01);
}

TEST_CASE("Terrestrial user estimate")
{
    CMatrix one = CMatrix::Ones(1, 1);
    CHECK(tue_estimation(one, 1.0, 1.0)(0, 0).real() == Approx(0.5));
    CHECK(tue_estimation(one, 0.0, 1.0).norm() == 0.0);

    RandomStream rng(6);
    for (int i = 0; i < 200; ++i)
    {
        const CMatrix R = random_psd(3, rng, rng.uniform(0.01, 10.0));
        const CMatrix G = tue_estimation(R, rng.uniform(0.0, 5.0), rng.uniform(0.01, 2.0));
        CHECK(min_eigenvalue(G) >= -1e-10 * R.trace().real());
        CHECK(min_eigenvalue(R - G) >= -1e-10 * R.trace().real());
    }
}
