// SPDX-License-Identifier: Apache-2.0
//
// dbfsim - behavioral model of a digital beamforming uplink
// Copyright (C) 2026 the dbfsim developers
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

#pragma once

#include <string>

#include "dbfsim/sweep.hpp"

namespace dbfsim {

inline constexpr int kResultSchemaVersion = 1;

/// One row per (grid cell, user): swept-variable columns, then user_index
/// and the metric fields; failed cells leave metrics empty and fill the
/// trailing error column. Row order is lexicographic over axes, then user.
void write_csv(const ResultGrid& grid, const std::string& path);

/// Full grid with metadata; loadable back via read_json.
void write_json(const ResultGrid& grid, const std::string& path);

/// Inverse of write_json.
ResultGrid read_json(const std::string& path);

/// Config (and optional sweep) overrides from a JSON file; fields present
/// in the file replace those in `spec`.
void apply_config_file(SweepSpec& spec, const std::string& path, std::vector<std::string>& warnings);

} // namespace dbfsim
