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

#include "cfuav/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cfuav
{

double quantile_sorted(const std::vector<double> &sorted, double q)
{
    if (sorted.empty())
        throw std::invalid_argument("quantile_sorted: empty sample");
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("quantile_sorted: q outside [0, 1]");
    const double h = static_cast<double>(sorted.size() - 1) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

DistributionSummary summarize(std::vector<double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("summarize: empty sample");
    std::sort(samples.begin(), samples.end());
    DistributionSummary s;
    s.median = quantile_sorted(samples, 0.5);
    s.p95_likely = quantile_sorted(samples, 0.05);
    s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
    s.max = samples.back();
    s.sorted = std::move(samples);
    return s;
}

} // namespace cfuav
