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

/// Line plot of a 1-D or 2-D grid (2nd axis renders as a curve family).
/// Axis scales honor the spec's log flags. Plots user 0's metric.
/// Throws ConfigError for empty or >2-D grids.
void write_svg_plot(const ResultGrid& grid, const std::string& path);

} // namespace dbfsim
