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

#ifndef CFUAV_RANDOM_HPP
#define CFUAV_RANDOM_HPP

#include "cfuav/types.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace cfuav
{

/// Seeded random stream. Substreams are keyed by a list of integers
/// (seed, realization id, purpose, ...) so results never depend on the order
/// in which workers pick up realizations.
class RandomStream
{
public:
    explicit RandomStream(std::uint64_t seed) : RandomStream({seed}) {}

    RandomStream(std::initializer_list<std::uint64_t> key)
    {
        std::vector<std::uint32_t> words;
        words.reserve(2 * key.size());
        for (auto k : key)
        {
            words.push_back(static_cast<std::uint32_t>(k & 0xffffffffu));
            words.push_back(static_cast<std::uint32_t>(k >> 32));
        }
        std::seed_seq seq(words.begin(), words.end());
        engine_.seed(seq);
    }

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    double normal() { return normal_(engine_); }

    /// Circularly symmetric complex Gaussian with the given variance.
    Complex complex_normal(double variance = 1.0)
    {
        const double s = std::sqrt(variance / 2.0);
        const double re = normal_(engine_);
        const double im = normal_(engine_);
        return {s * re, s * im};
    }

    /// Vector of i.i.d. CN(0, 1) entries.
    CVector complex_normal_vector(Eigen::Index n)
    {
        CVector v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v(i) = complex_normal();
        return v;
    }

    /// Matrix of i.i.d. CN(0, 1) entries.
    CMatrix complex_normal_matrix(Eigen::Index rows, Eigen::Index cols)
    {
        CMatrix m(rows, cols);
        for (Eigen::Index c = 0; c < cols; ++c)
            for (Eigen::Index r = 0; r < rows; ++r)
                m(r, c) = complex_normal();
        return m;
    }

    std::mt19937_64 &engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace cfuav

#endif
