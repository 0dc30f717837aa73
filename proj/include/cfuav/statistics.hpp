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

#ifndef CFUAV_STATISTICS_HPP
#define CFUAV_STATISTICS_HPP

#include <vector>

namespace cfuav
{

/// Quantile of sorted data by linear interpolation between order statistics:
/// position h = (n - 1) q, value x[floor h] + (h - floor h)(x[floor h + 1] - x[floor h]).
/// Throws std::invalid_argument on empty input or q outside [0, 1].
double quantile_sorted(const std::vector<double> &sorted, double q);

struct DistributionSummary
{
    std::vector<double> sorted;
    double median = 0.0;
    double p95_likely = 0.0; // 5th percentile: exceeded with probability 0.95
    double mean = 0.0;
    double max = 0.0;
};

DistributionSummary summarize(std::vector<double> samples);

} // namespace cfuav

#endif
