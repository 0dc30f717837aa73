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

#ifndef CFUAV_ORACLE_HPP
#define CFUAV_ORACLE_HPP

#include "cfuav/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cfuav
{

/// One closed form against its signal-level sample mean.
struct MonteCarloReport
{
    std::string quantity;
    double closed_form = 0.0;
    double sample_mean = 0.0;
    long sample_count = 0;
    double rel_error = 0.0; // |closed_form - sample_mean| / max(|closed_form|, floor)
    bool pass = false;
};

MonteCarloReport make_report(const std::string &quantity, double closed_form, double sample_mean, long sample_count,
                             double tolerance, double floor = 1e-300);

struct ValidationOptions
{
    long realizations = 100000;
    std::uint64_t seed = 1;
    int threads = 1;
    double tolerance = 0.02;
    std::optional<Position> uav; // drawn uniformly when unset
    // Pilot distortion eta drawn once per realization for all APs instead of
    // independently per link. The closed-form BU term assumes independent
    // estimation errors across APs and does not hold in this mode.
    bool common_pilot_distortion = false;
};

/// Simulates pilots, LMMSE estimates, terrestrial user estimates, MR energy
/// beamforming and the MR-combined uplink for one placement (terrestrial user
/// always present) and compares every second moment with its closed form:
///
///   est_q_trace, est_c_trace, upsilon, tue_g_trace, tue_pickup,
///   he_cf, he_sc, he_cellular, he_cf_tue, he_sc_tue, he_cellular_tue,
///   se_ds, se_bu, se_hi, se_ui, se_ns, se_sinr
///
/// Energy beamformers are normalized with the sampled E{|g_hat|^2}. The pilot
/// distortion is drawn per link; the uplink data distortion is common to all
/// APs.
std::vector<MonteCarloReport> run_validation(const ScenarioConfig &config, const ValidationOptions &options);

} // namespace cfuav

#endif
