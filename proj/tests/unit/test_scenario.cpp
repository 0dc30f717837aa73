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

#include "cfuav/scenario.hpp"

#include <cmath>

using namespace cfuav;
using Catch::Approx;

TEST_CASE("Placement - default square")
{
    ScenarioConfig c;
    RandomStream rng(7);
    const auto p = generate_placement(c, rng);
    REQUIRE(p.ap_positions.size() == 20);
    for (const auto &q : p.ap_positions)
    {
        CHECK(q.x >= 0.0);
        CHECK(q.x <= 100.0);
        CHECK(q.y >= 0.0);
        CHECK(q.y <= 100.0);
    }
    CHECK(p.bs_position == Position{50.0, 50.0});
    CHECK_FALSE(p.tue_position.has_value());
    CHECK(placement_inside_area(p, c));
}

TEST_CASE("Placement - determinism and terrestrial user")
{
    ScenarioConfig c;
    c.tue_enabled = true;
    RandomStream a({3, 1, 4}), b({3, 1, 4}), d({3, 1, 5});
    const auto pa = generate_placement(c, a);
    const auto pb = generate_placement(c, b);
    const auto pd = generate_placement(c, d);
    REQUIRE(pa.tue_position.has_value());
    CHECK(pa.ap_positions == pb.ap_positions);
    CHECK(*pa.tue_position == *pb.tue_position);
    CHECK(pa.uav_start == pb.uav_start);
    CHECK_FALSE(pa.ap_positions == pd.ap_positions);
}

TEST_CASE("Placement - zero-size square")
{
    ScenarioConfig c;
    c.area_side = 0.0;
    c.uav_start = Position{0.0, 0.0};
    c.uav_dest = Position{0.0, 0.0};
    RandomStream rng(1);
    auto p = generate_placement(c, rng);
    CHECK(placement_inside_area(p, c));
    p.ap_positions[0].x = 1.0;
    CHECK_FALSE(placement_inside_area(p, c));
}

TEST_CASE("Placement - configured endpoints and BS")
{
    ScenarioConfig c;
    c.uav_start = Position{0.0, 0.0};
    c.uav_dest = Position{85.0, 85.0};
    c.bs_position = Position{10.0, 20.0};
    RandomStream rng(2);
    const auto p = generate_placement(c, rng);
    CHECK(p.uav_start == Position{0.0, 0.0});
    CHECK(p.uav_dest == Position{85.0, 85.0});
    CHECK(p.bs_position == Position{10.0, 20.0});
}

TEST_CASE("UAV step - kinematics")
{
    ScenarioConfig c;
    REQUIRE(c.d_min() == Approx(0.04));
    const auto q = step_uav({0.0, 0.0}, pi / 4.0, c);
    CHECK(q.x == Approx(0.028284271247).epsilon(1e-9));
    CHECK(q.y == Approx(0.028284271247).epsilon(1e-9));

    const auto r = step_uav({3.0, -2.0}, 0.0, c);
    CHECK(r.x == Approx(3.04));
    CHECK(r.y == -2.0);

    RandomStream rng(11);
    for (int i = 0; i < 100; ++i)
    {
        const Position p{rng.uniform(0, 100), rng.uniform(0, 100)};
        const double th = rng.uniform(-pi, pi);
        CHECK(std::abs(distance(step_uav(p, th, c), p) - 0.04) <= 1e-12 * 0.04 * 100);
    }
    CHECK_THROWS_AS(step_uav({0, 0}, std::nan(""), c), std::invalid_argument);
}

TEST_CASE("Slots on a straight line")
{
    ScenarioConfig c;
    CHECK(slots_on_line({0, 0}, {85, 85}, c) == 3006);
    CHECK(slots_on_line({0, 0}, {0, 0}, c) == 0);
    CHECK(slots_on_line({0, 0}, {0.04, 0}, c) == 1);
    CHECK(slots_on_line({0, 0}, {0.05, 0}, c) == 2);
}

TEST_CASE("Config validation")
{
    ScenarioConfig c;
    CHECK_NOTHROW(validate(c));
    c.rho = 1.5;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = {};
    c.kappa = -0.1;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = {};
    c.V_hor = 0.0;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = {};
    CHECK(c.tau_e() == Approx(99.5));
    CHECK(c.data_prelog() == Approx(0.4975));
    CHECK(c.p_d_sc() == Approx(20000.0));
}
