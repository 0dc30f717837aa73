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

#include "cfuav/statistics.hpp"

#include <algorithm>
#include <cmath>

using namespace cfuav;

namespace
{
// Brute-force 5th percentile with the same interpolation rule.
double p5_oracle(std::vector<double> x)
{
    std::sort(x.begin(), x.end());
    const double h = 0.05 * static_cast<double>(x.size() - 1);
    const std::size_t i = static_cast<std::size_t>(h);
    if (i + 1 >= x.size())
        return x[i];
    return x[i] * (1.0 - (h - i)) + x[i + 1] * (h - i);
}
} // namespace

TEST_CASE("Distribution summary")
{
    const auto one = summarize({3.0});
    CHECK(one.median == 3.0);
    CHECK(one.p95_likely == 3.0);
    CHECK(one.mean == 3.0);

    const auto two = summarize({4.0, 2.0});
    CHECK(two.median == 3.0);
    CHECK(two.p95_likely == Catch::Approx(2.1));
    CHECK(two.p95_likely == Catch::Approx(p5_oracle({4.0, 2.0})));

    std::vector<double> hundred;
    for (int i = 100; i >= 1; --i)
        hundred.push_back(i * i);
    const auto s = summarize(hundred);
    CHECK(s.p95_likely == Catch::Approx(p5_oracle(hundred)));
    CHECK(s.p95_likely == Catch::Approx(25.0 + 0.95 * 11.0));
    CHECK(s.median == Catch::Approx((50.0 * 50.0 + 51.0 * 51.0) / 2.0));
    CHECK(s.p95_likely <= s.median);
    CHECK(s.median <= s.max);
    CHECK(std::is_sorted(s.sorted.begin(), s.sorted.end()));

    CHECK_THROWS(summarize({}));
    CHECK_THROWS(quantile_sorted({1.0}, 1.5));
}
