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

#ifndef CFUAV_LINALG_HPP
#define CFUAV_LINALG_HPP

#include "cfuav/types.hpp"

namespace cfuav
{

// Small helpers for Hermitian algebra. Quantities that are real in exact
// arithmetic are returned as double after the imaginary residue is checked.

/// v^H A v for Hermitian A.
double hermitian_form(const CVector &v, const CMatrix &A);

/// tr(A B) for Hermitian A, B.
double trace_product(const CMatrix &A, const CMatrix &B);

/// (A + A^H) / 2
CMatrix hermitian_part(const CMatrix &A);

/// Principal square root of a Hermitian PSD matrix via eigendecomposition.
/// Negative eigenvalues (numerical noise) are clamped at zero; eigenvalues
/// below -tol * trace are reported as a non-PSD input.
CMatrix sqrtm_psd(const CMatrix &A, double tol = 1e-10);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMatrix &A);

} // namespace cfuav

#endif
