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

#ifndef CFUAV_CONFIG_FILE_HPP
#define CFUAV_CONFIG_FILE_HPP

#include "cfuav/scenario.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cfuav
{

// Flat `key = value` configuration files. Lines starting with '#' (and
// trailing '# ...' comments) are ignored. Keys ending in `_db` / `_dbm` are
// converted to linear (mW for powers) at load time.
//
//   L = 20
//   beta0_db = -40
//   sigma2_dbm = -96
//   p_d_cf_dbm = 30
//   tue_enabled = true

/// Parses the text into ordered (key, value) pairs. Throws ConfigError with
/// the line number on malformed lines.
std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string &text);

/// Applies one key to the config. Throws ConfigError for unknown keys or
/// unparsable values.
void apply_config_key(ScenarioConfig &config, const std::string &key, const std::string &value);

/// Reads and applies a config file on top of `base`, then validates.
ScenarioConfig load_config_file(const std::string &path, ScenarioConfig base = {});

/// Every key of the config with its linear value, for result sidecars.
std::map<std::string, std::string> config_echo(const ScenarioConfig &config);

} // namespace cfuav

#endif
