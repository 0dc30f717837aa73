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

#ifndef CFUAV_EXPERIMENTS_HPP
#define CFUAV_EXPERIMENTS_HPP

#include "cfuav/oracle.hpp"
#include "cfuav/statistics.hpp"
#include "cfuav/system_model.hpp"
#include "cfuav/trajectory.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace cfuav
{

/// Settings shared by all experiment kinds.
struct RunOptions
{
    long realizations = 1000;
    std::uint64_t seed = 1;
    int threads = 1;
    int warm_up = 5; // energy-only slots before sampling
};

/// Version string baked in at build time.
const char *git_describe();

// Realization r of any experiment draws its placement from the stream
// {seed, r, 0}; the UAV position and Monte Carlo draws use further keys.
// Variants and sweep points that share (seed, r) see the same placement.
SystemModel realization_model(const ScenarioConfig &config, std::uint64_t seed, long r);

// ---------------------------------------------------------------- CDF ---

enum class CdfQuantity
{
    Se,
    He
};

struct CdfVariant
{
    std::string variant;
    std::vector<double> samples; // in realization order
    DistributionSummary summary;
};

/// One slot per realization at a uniform UAV position after `warm_up`
/// energy-only slots from p0_pilot. SC and cellular SE use Monte Carlo MR
/// with se_mc_draws estimate draws.
std::vector<CdfVariant> run_cdf_experiment(CdfQuantity quantity, const std::vector<Architecture> &variants,
                                           const ScenarioConfig &config, const RunOptions &options);

/// `variant,sample` rows, variants in the given order.
void write_cdf_csv(std::ostream &out, const std::vector<CdfVariant> &result);

/// `variant,median,p95_likely,mean` rows.
void write_cdf_summary_csv(std::ostream &out, const std::vector<CdfVariant> &result);

// ------------------------------------------------------------ rho sweep ---

struct SweepVariant
{
    std::string label;
    Architecture arch = Architecture::Cf;
    ScenarioConfig config;
};

/// Parses "arch/key=value/key=value" on top of `base`, e.g.
/// "cf/N=4/H=20/kappa=0.98". The label is the text itself.
SweepVariant parse_sweep_variant(const std::string &text, const ScenarioConfig &base);

struct SweepPoint
{
    std::string variant;
    double rho = 0.0;
    double median_se = 0.0;
};

/// Evenly spaced grid 0, step, ..., 1 (1 is always included).
std::vector<double> rho_grid(double step);

/// Median SE over `realizations` placements for every (variant, rho).
std::vector<SweepPoint> run_rho_sweep(const std::vector<SweepVariant> &variants, const std::vector<double> &rhos,
                                      const RunOptions &options);

/// `variant,rho,median_se` rows.
void write_rho_sweep_csv(std::ostream &out, const std::vector<SweepPoint> &points);

/// rho with the largest median SE of one variant (first on ties).
double argmax_rho(const std::vector<SweepPoint> &points, const std::string &variant);

// ----------------------------------------------------------- trajectory ---

enum class Scheme
{
    Angle,
    ApSearch,
    Line,
    AllAps
};

std::string to_string(Scheme s);

/// Accepts "angle", "ap", "line" and "all-aps".
Scheme parse_scheme(const std::string &name);

struct TrajectoryRun
{
    long placement = 0;
    Architecture arch = Architecture::Cf;
    Scheme scheme = Scheme::Line;
    double average_se = 0.0;
    TrajectoryLog log; // per-slot vectors kept only for placements < keep_logs
};

struct TrajectoryExperiment
{
    std::vector<TrajectoryRun> runs; // placement-major, then variant, then scheme
    std::vector<Placement> placements;
};

/// Every scheme for every variant on identical placements. Start and dest
/// come from the config, defaulting to (0, 0) and (85, 85).
TrajectoryExperiment run_trajectory_experiment(const std::vector<Architecture> &variants,
                                               const std::vector<Scheme> &schemes, const ScenarioConfig &config,
                                               const RunOptions &options, long keep_logs = 1);

/// `placement,variant,scheme,average_se,slots_used,direction_switches,direction_searches,n_ap,arrived`
void write_trajectory_summary_csv(std::ostream &out, const TrajectoryExperiment &result);

/// `kind,index,x,y` with kind in {ap, bs, tue, start, dest}.
void write_placement_csv(std::ostream &out, const Placement &placement, const TrajectoryLog &log);

// ----------------------------------------------------- validation, misc ---

/// `quantity,closed_form,sample_mean,rel_error,pass`
void write_validation_csv(std::ostream &out, const std::vector<MonteCarloReport> &reports);

/// `k,l,n,statistics,estimation,beamforming,energy_tx,combining,total`
void write_complexity_csv(std::ostream &out, const ScenarioConfig &config, int max_users);

// -------------------------------------------------------------- output ---

/// Writes `text` to dir/name, creating dir. Throws std::runtime_error with
/// the path on failure.
void write_text_file(const std::filesystem::path &dir, const std::string &name, const std::string &text);

/// JSON sidecar with the config echo, seed, options, version and wall clock.
std::string sidecar_json(const std::string &kind, const ScenarioConfig &config, const RunOptions &options,
                         double wall_clock_s, const std::map<std::string, std::string> &extra = {});

} // namespace cfuav

#endif
