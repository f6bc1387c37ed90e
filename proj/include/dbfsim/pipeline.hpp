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

#include <vector>

#include "dbfsim/config.hpp"

namespace dbfsim {

/// Measured link quality of one desired user at one simulation point.
struct MetricsRecord {
    int user_index = 0;
    double ber = 0.0;
    double evm_rms_pct = 0.0;
    double sndr_db = 0.0;
    double enob = 0.0;          ///< (sndr_db - 4.36)/6.02
    double array_gain_db = 0.0; ///< vs. antenna 0 at the LNA output, pre-ADC
};

/// Runs the full chain for one configuration:
/// tx -> placement/channel -> thermal noise -> per-antenna VGA -> per-antenna
/// ADC -> beamformer -> metrics. Returns one record per desired user; the
/// interferer's reconstructed stream is discarded.
std::vector<MetricsRecord> run_single(const SystemConfig& cfg);

} // namespace dbfsim
