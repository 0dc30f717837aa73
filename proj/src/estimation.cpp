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

#include "cfuav/estimation.hpp"

#include "cfuav/linalg.hpp"

#include <cmath>

namespace cfuav
{

namespace
{
// Solves A X = B for Hermitian positive definite A.
CMatrix hpd_solve(const CMatrix &A, const CMatrix &B, const char *what)
{
    Eigen::LLT<CMatrix> llt(A);
    if (llt.info() != Eigen::Success)
        throw DegenerateConfig(std::string(what) + ": singular estimation system");
    return llt.solve(B);
}
} // namespace

EstimationMatrices estimation_matrices(const CVector &h_bar, const CMatrix &R, double p, double kappa,
                                       double sigma2)
{
    const Eigen::Index n = R.rows();
    if (R.cols() != n || h_bar.size() != n)
        throw std::invalid_argument("estimation_matrices: dimension mismatch");
    if (p < 0.0)
        throw std::invalid_argument("estimation_matrices: negative pilot power");

    CMatrix A = p * R + ((1.0 - kappa) * p) * (h_bar * h_bar.adjoint());
    A.diagonal().array() += sigma2;
    A = hermitian_part(A);

    EstimationMatrices m;
    m.Psi = hermitian_part(hpd_solve(A, CMatrix::Identity(n, n), "estimation_matrices"));
    // R Psi = (Psi R)^H = (A^-1 R)^H
    const CMatrix RPsi = hpd_solve(A, R, "estimation_matrices").adjoint();
    m.Q = hermitian_part((kappa * p) * (RPsi * R));
    m.C = hermitian_part(R - m.Q);
    m.filter = std::sqrt(kappa * p) * RPsi;
    return m;
}

CVector lmmse_estimate(const CVector &h_bar, const EstimationMatrices &mats, const CVector &z, double p,
                       double kappa)
{
    if (z.size() != h_bar.size())
        throw std::invalid_argument("lmmse_estimate: dimension mismatch");
    return h_bar + mats.filter * (z - std::sqrt(kappa * p) * h_bar);
}

CVector simulate_pilot(const CVector &g, double p, double kappa, double sigma2, RandomStream &rng)
{
    const Complex eta = rng.complex_normal((1.0 - kappa) * p);
    CVector z = (std::sqrt(kappa * p) + eta) * g;
    const double s = std::sqrt(sigma2);
    for (Eigen::Index i = 0; i < z.size(); ++i)
        z(i) += s * rng.complex_normal();
    return z;
}

CMatrix tue_estimation_filter(const CMatrix &R_te, double p_te, double sigma2)
{
    if (p_te < 0.0)
        throw std::invalid_argument("tue_estimation: negative pilot power");
    CMatrix A = p_te * R_te;
    A.diagonal().array() += sigma2;
    A = hermitian_part(A);
    return std::sqrt(p_te) * hpd_solve(A, R_te, "tue_estimation").adjoint();
}

CMatrix tue_estimation(const CMatrix &R_te, double p_te, double sigma2)
{
    const CMatrix F = tue_estimation_filter(R_te, p_te, sigma2);
    return hermitian_part(std::sqrt(p_te) * (F * R_te));
}

} // namespace cfuav
