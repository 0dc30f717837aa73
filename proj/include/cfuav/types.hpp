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

#ifndef CFUAV_TYPES_HPP
#define CFUAV_TYPES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace cfuav
{

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Raised when a configuration makes a closed form undefined (dead link,
/// singular estimator, no data phase).
class DegenerateConfig : public std::runtime_error
{
public:
    explicit DegenerateConfig(const std::string &what) : std::runtime_error(what) {}
};

/// Raised for malformed or out-of-range configuration input.
class ConfigError : public std::runtime_error
{
public:
    explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Real part of a scalar that is mathematically real; throws if the imaginary
/// residue exceeds `rel_tol` relative to the magnitude.
double real_checked(Complex value, const char *what, double rel_tol = 1e-10);

} // namespace cfuav

#endif
