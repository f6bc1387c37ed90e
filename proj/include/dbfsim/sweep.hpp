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

#include <cstdint>
#include <string>
#include <vector>

#include "dbfsim/config.hpp"
#include "dbfsim/pipeline.hpp"

namespace dbfsim {

enum class SweepVar { m, k, b, snr_therm, sir, angle };
enum class AngleMode { user_spacing, blocker_angle };
enum class OutputMetric { ber, evm, sndr, enob, sir_min, array_gain };

std::string to_string(SweepVar v);
std::string to_string(OutputMetric m);

/// One swept variable. `log2_step` steps multiplicatively by `step`
/// (e.g. 4..64 x2) instead of additively.
struct SweepAxis {
    SweepVar var = SweepVar::snr_therm;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    bool log2_step = false;

    std::vector<double> values() const;
};

/// Up to three swept variables over a base configuration. In sir_min mode
/// the SIR axis is the inner sweep consumed by the crossing search and does
/// not appear in the output grid.
struct SweepSpec {
    std::string name = "custom";
    SystemConfig base;
    std::vector<SweepAxis> axes;
    AngleMode angle_mode = AngleMode::user_spacing;
    OutputMetric output = OutputMetric::sndr;
    bool log_x = false;
    bool log_y = false;
    bool log_z = false;
};

/// Throws ConfigError on structural violations; returns soft warnings.
std::vector<std::string> validate_spec(const SweepSpec& spec);

/// One evaluated grid cell. Cells that fail (e.g. ill-conditioned zero-force
/// geometry at a swept-angle extreme) carry the error text instead.
struct CellResult {
    bool ok = false;
    std::string error;
    std::vector<MetricsRecord> users;
    std::vector<double> sir_min_db; ///< per user, sir_min mode only (NaN = no crossing)
};

struct ResultGrid {
    SweepSpec spec;
    std::vector<SweepAxis> grid_axes;              ///< output axes (SIR axis consumed in sir_min mode)
    std::vector<std::vector<double>> axis_values;  ///< values per output axis
    std::vector<CellResult> cells;                 ///< row-major over axis_values
    std::vector<std::string> warnings;
    std::uint64_t master_seed = 0;
    std::string tool_version;
    std::string timestamp;

    std::size_t cell_count() const { return cells.size(); }
    std::size_t flat_index(const std::vector<std::size_t>& idx) const;
};

/// Evaluates every grid point with deterministic per-cell seeds. Results are
/// identical for any worker count; per-cell failures are recorded in-grid.
ResultGrid run_sweep(const SweepSpec& spec, int jobs = 1);

} // namespace dbfsim
