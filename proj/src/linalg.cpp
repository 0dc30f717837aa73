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

#include "cfuav/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace cfuav
{

double real_checked(Complex value, const char *what, double rel_tol)
{
    const double scale = std::abs(value);
    if (std::abs(value.imag()) > rel_tol * scale && std::abs(value.imag()) > 1e-300)
        throw std::domain_error(std::string(what) + ": imaginary residue too large for a real quantity");
    return value.real();
}

namespace
{
// Residue check against a caller supplied scale; a quadratic form of a
// Hermitian matrix can be tiny compared to its operands.
double real_scaled(Complex value, double scale, const char *what)
{
    if (std::abs(value.imag()) > 1e-10 * scale)
        throw std::domain_error(std::string(what) + ": imaginary residue too large for a real quantity");
    return value.real();
}
} // namespace

double hermitian_form(const CVector &v, const CMatrix &A)
{
    const Complex q = v.dot(A * v);
    return real_scaled(q, v.squaredNorm() * A.norm() + std::abs(q), "hermitian_form");
}

double trace_product(const CMatrix &A, const CMatrix &B)
{
    // tr(AB) = sum_ij A_ij B_ji
    const Complex t = A.cwiseProduct(B.transpose()).sum();
    return real_scaled(t, A.norm() * B.norm() + std::abs(t), "trace_product");
}

CMatrix hermitian_part(const CMatrix &A)
{
    return (A + A.adjoint()) * 0.5;
}

CMatrix sqrtm_psd(const CMatrix &A, double tol)
{
    if (A.rows() != A.cols())
        throw std::invalid_argument("sqrtm_psd: matrix must be square");
    if (A.size() == 0)
        return A;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(A));
    if (es.info() != Eigen::Success)
        throw std::domain_error("sqrtm_psd: eigendecomposition failed");
    const double trace = std::abs(A.trace().real());
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i)
    {
        if (ev(i) < -tol * std::max(trace, 1e-300))
            throw std::domain_error("sqrtm_psd: input is not positive semi-definite");
        ev(i) = std::sqrt(std::max(ev(i), 0.0));
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

double min_eigenvalue(const CMatrix &A)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(A), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace cfuav
