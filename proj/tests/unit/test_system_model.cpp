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

#include "cfuav/system_model.hpp"

#include <cmath>
#include <cstring>
#include <vector>

using namespace cfuav;
using Catch::Approx;

namespace
{
bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

constexpr Architecture all_arch[] = {Architecture::Cf, Architecture::CfLsfd, Architecture::SmallCell,
                                     Architecture::Cellular};
} // namespace

TEST_CASE("Architecture names")
{
    for (auto a : all_arch)
        CHECK(parse_architecture(to_string(a)) == a);
    CHECK_THROWS_AS(parse_architecture("mesh"), ConfigError);
}

TEST_CASE("System model - reproducible realization")
{
    ScenarioConfig c;
    RandomStream a(4), b(4);
    const auto m1 = SystemModel::random(c, a);
    const auto m2 = SystemModel::random(c, b);
    CHECK(m1.placement().ap_positions == m2.placement().ap_positions);
    CHECK(m1.scattering().ap == m2.scattering().ap);
    CHECK(m1.tue() == nullptr);
    CHECK(m1.stacked_antennas() == 40);
}

TEST_CASE("System model - stacked cellular link")
{
    ScenarioConfig c;
    RandomStream rng(12);
    const auto m = SystemModel::random(c, rng);
    const Position u{30, 70};
    const auto bs = m.bs_link(u);
    const auto small = uav_link(u, m.placement().bs_position, c.N, c, m.scattering().bs);
    REQUIRE(bs.R.rows() == 40);
    for (int k = 0; k < c.L; ++k)
    {
        CHECK((bs.R.block(k * c.N, k * c.N, c.N, c.N) - small.R).norm() <= 1e-12 * small.R.norm());
        // Successive blocks of the LoS vector differ by one array phase step.
        const Complex step = std::exp(Complex(0.0, 2.0 * M_PI * c.d_H * c.N * std::sin(bs.phi)));
        if (k > 0)
            CHECK((bs.h_bar.segment(k * c.N, c.N) - step * bs.h_bar.segment((k - 1) * c.N, c.N)).norm() <=
                  1e-12 * bs.h_bar.norm());
    }
    CHECK((bs.h_bar.head(c.N) - small.h_bar).norm() <= 1e-15);
}

TEST_CASE("System model - terrestrial user state")
{
    ScenarioConfig c;
    c.tue_enabled = true;
    RandomStream rng(3);
    const auto m = SystemModel::random(c, rng);
    REQUIRE(m.tue() != nullptr);
    const auto &t = *m.tue();
    CHECK(t.ap.size() == 20);
    CHECK(t.bs.R_te.rows() == 40);
    for (const auto &l : t.ap)
        CHECK(l.beta_te <= t.ap[static_cast<std::size_t>(t.strongest_ap)].beta_te);
}

TEST_CASE("Slot evaluation - energy split and zero power")
{
    ScenarioConfig c;
    RandomStream rng(7);
    const auto m = SystemModel::random(c, rng);
    const Position u{50, 50};
    for (auto a : all_arch)
    {
        const auto s = evaluate_slot(m, a, u, c.p0_pilot);
        CHECK(s.energy.p_he > 0.0);
        CHECK(s.energy.p_u == Approx(200.0 / 100.5 * s.energy.p_he));
        CHECK(s.se > 0.0);
        const auto e = evaluate_energy(m, a, u, c.p0_pilot);
        CHECK(same_bits(e.p_he, s.energy.p_he));
    }
    for (double rho : {0.0, 1.0})
    {
        auto c2 = c;
        c2.rho = rho;
        const SystemModel m2(c2, m.placement(), m.scattering());
        for (auto a : all_arch)
            CHECK(evaluate_slot(m2, a, u, c.p0_pilot).se == 0.0);
    }
}

TEST_CASE("Slot evaluation - Monte Carlo against the closed-form bound")
{
    ScenarioConfig c;
    c.se_mc_draws = 4000;
    RandomStream rng(21);
    const auto m = SystemModel::random(c, rng);
    const Position u{20, 80};
    for (auto a : {Architecture::SmallCell, Architecture::Cellular})
    {
        RandomStream s(1);
        const auto mc = evaluate_slot(m, a, u, c.p0_pilot, SeMethod::MonteCarlo, &s);
        const auto cf = evaluate_slot(m, a, u, c.p0_pilot, SeMethod::ClosedForm);
        // Jensen: the use-and-then-forget bound never exceeds the ergodic MR value.
        CHECK(cf.se <= mc.se + 4 * mc.se_std_error);
        CHECK(same_bits(cf.energy.p_he, mc.energy.p_he));
    }
    CHECK_THROWS(evaluate_slot(m, Architecture::Cellular, u, 1.0, SeMethod::MonteCarlo, nullptr));
}

TEST_CASE("Slot evaluation - warm-up reaches steady state")
{
    ScenarioConfig c;
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
    {
        RandomStream rng(seed);
        const auto m = SystemModel::random(c, rng);
        const Position u{rng.uniform(0, 100), rng.uniform(0, 100)};
        for (auto a : all_arch)
        {
            const double p5 = warm_up_pilot(m, a, u, 5);
            const double p6 = warm_up_pilot(m, a, u, 6);
            CHECK(std::abs(p6 - p5) <= 1e-3 * p5);
        }
    }
}

TEST_CASE("Slot evaluation - disabled terrestrial user is bitwise TUE-free")
{
    ScenarioConfig c;
    RandomStream rng(5);
    const auto m = SystemModel::random(c, rng);
    const Position u{10, 40};
    for (auto a : all_arch)
    {
        const auto s = evaluate_slot(m, a, u, c.p0_pilot);
        const auto links = m.ap_links(u);
        std::vector<LinkMoments> mom;
        for (const auto &l : links)
            mom.push_back(link_moments(l.h_bar, l.R, estimation_matrices(l, c.p0_pilot, c.kappa, c.sigma2)));
        const std::vector<double> zeros(mom.size(), 0.0);
        switch (a)
        {
        case Architecture::Cf:
        {
            const double he = he_cf(mom, c.p_d_cf, c.kappa, c.tau_e(), c.tau_c);
            CHECK(same_bits(s.energy.p_he, he));
            CHECK(same_bits(he, he_cf(mom, c.p_d_cf, c.kappa, c.tau_e(), c.tau_c, zeros)));
            const double se = se_cf_closed_form(mom, s.energy.p_u, c.kappa, c.sigma2, c.data_prelog()).se;
            CHECK(same_bits(s.se, se));
            CHECK(same_bits(se, se_cf_closed_form(mom, s.energy.p_u, c.kappa, c.sigma2, c.data_prelog(), zeros,
                                                  c.p_te_u)
                                    .se));
            break;
        }
        case Architecture::CfLsfd:
        {
            const double se = se_lsfd(lsfd_vectors(mom), s.energy.p_u, c.p_te_u, c.kappa, c.sigma2, c.data_prelog());
            CHECK(same_bits(s.se, se));
            CHECK(same_bits(se, se_lsfd(lsfd_vectors(mom, zeros), s.energy.p_u, c.p_te_u, c.kappa, c.sigma2,
                                        c.data_prelog())));
            break;
        }
        case Architecture::SmallCell:
        {
            const auto he = he_sc(mom, c.p_d_sc(), c.kappa, c.tau_e(), c.tau_c);
            CHECK(same_bits(s.energy.p_he, he.p_he));
            CHECK(same_bits(he.p_he, he_sc(mom, c.p_d_sc(), c.kappa, c.tau_e(), c.tau_c, zeros).p_he));
            break;
        }
        case Architecture::Cellular:
        {
            const auto bs = m.bs_link(u);
            const auto mm = link_moments(bs.h_bar, bs.R, estimation_matrices(bs, c.p0_pilot, c.kappa, c.sigma2));
            const double he = he_cellular(mm, c.p_d_c, c.kappa, c.tau_e(), c.tau_c);
            CHECK(same_bits(s.energy.p_he, he));
            CHECK(same_bits(he, he_cellular(mm, c.p_d_c, c.kappa, c.tau_e(), c.tau_c, 0.0)));
            break;
        }
        }
    }
}
