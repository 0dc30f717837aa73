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

#ifndef CFUAV_SYSTEM_MODEL_HPP
#define CFUAV_SYSTEM_MODEL_HPP

#include "cfuav/channel.hpp"
#include "cfuav/energy.hpp"
#include "cfuav/estimation.hpp"
#include "cfuav/random.hpp"
#include "cfuav/scenario.hpp"
#include "cfuav/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cfuav
{

enum class Architecture
{
    Cf,        // cell-free, matched-filter combining at the CPU
    CfLsfd,    // cell-free with large-scale fading decoding
    SmallCell, // best single AP, power scaled by sc_power_scale
    Cellular   // one co-located LN-antenna BS
};

std::string to_string(Architecture a);

/// Accepts "cf", "cf-lsfd", "sc" and "cellular".
Architecture parse_architecture(const std::string &name);

/// Cluster AoA offsets of every link, drawn once per placement and reused
/// for all UAV positions.
struct FrozenScattering
{
    std::vector<std::vector<double>> ap;
    std::vector<double> bs;
    std::vector<std::vector<double>> tue_ap; // empty without a terrestrial user
    std::vector<double> tue_bs;
};

FrozenScattering draw_scattering(const ScenarioConfig &config, bool with_tue, RandomStream &rng);

/// Terrestrial user links and estimate covariances. The user does not move,
/// so these are computed once.
struct TueState
{
    std::vector<TueLinkStatistics> ap;
    TueLinkStatistics bs;
    std::vector<CMatrix> G_ap;
    CMatrix G_bs;
    int strongest_ap = 0; // AP with the largest beta_te
};

/// One network realization: configuration, node positions and frozen
/// scattering. Link statistics are produced on demand for any UAV position.
class SystemModel
{
public:
    SystemModel(ScenarioConfig config, Placement placement, FrozenScattering scattering);

    /// Placement and scattering drawn from `rng` in that order.
    static SystemModel random(const ScenarioConfig &config, RandomStream &rng);

    const ScenarioConfig &config() const { return config_; }
    const Placement &placement() const { return placement_; }
    const FrozenScattering &scattering() const { return scattering_; }
    const TueState *tue() const { return tue_ ? &*tue_ : nullptr; }
    int stacked_antennas() const { return config_.L * config_.N; }

    std::vector<LinkStatistics> ap_links(const Position &uav) const;
    LinkStatistics ap_link(const Position &uav, int l) const;
    LinkStatistics bs_link(const Position &uav) const;

private:
    ScenarioConfig config_;
    Placement placement_;
    FrozenScattering scattering_;
    std::optional<TueState> tue_;
};

/// How the small-cell and cellular expectations E{log2(1 + SINR)} are
/// evaluated. The cell-free variants are always closed form.
enum class SeMethod
{
    MonteCarlo, // sample mean over se_mc_draws estimate realizations
    ClosedForm  // deterministic use-and-then-forget bound of the single link
};

struct SlotOutcome
{
    double se = 0.0;
    double se_std_error = 0.0;
    SlotEnergyState energy;
    int energy_ap = -1; // small cell only
    int se_ap = -1;     // small cell only
};

/// Harvested energy, power split and SE of one coherence block with the
/// given pilot power. `rng` is required for SeMethod::MonteCarlo.
SlotOutcome evaluate_slot(const SystemModel &model, Architecture arch, const Position &uav, double pilot_power,
                          SeMethod method = SeMethod::ClosedForm, RandomStream *rng = nullptr);

/// Harvested energy only (no SE), with the power split.
SlotEnergyState evaluate_energy(const SystemModel &model, Architecture arch, const Position &uav,
                                double pilot_power, int *energy_ap = nullptr);

/// Runs `slots` energy-only blocks at a fixed position starting from
/// p0_pilot and returns the pilot power of the next block.
double warm_up_pilot(const SystemModel &model, Architecture arch, const Position &uav, int slots);

/// Power split that tolerates a missing data phase (rho = 1): the uplink
/// power is zero and the whole budget goes to the next pilot.
SlotEnergyState split_energy(double p_he, const ScenarioConfig &config);

} // namespace cfuav

#endif
