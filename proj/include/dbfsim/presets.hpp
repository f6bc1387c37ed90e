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
#include <vector>

#include "dbfsim/sweep.hpp"

namespace dbfsim {

/// Built-in sweep definitions reproducing the standard study set.
/// Throws ConfigError for unknown names (message lists the registry).
SweepSpec load_preset(const std::string& name);

std::vector<std::string> preset_names();

/// One-line description per preset, for --list-presets.
std::string preset_description(const std::string& name);

} // namespace dbfsim
