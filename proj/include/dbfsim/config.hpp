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

namespace dbfsim {

/// Full parameterization of one simulation point. Immutable once built;
/// every result is a pure function of (config, seed).
struct SystemConfig {
    int m_elements = 16;              ///< receive (base station) elements
    int k_transmitters = 1;           ///< users, interferer included when enabled
    int adc_bits = 5;                 ///< per-axis ADC resolution B
    double snr_therm_db = 20.0;       ///< per-element SNR of one nominal user at the LNA output
    double sir_db = 0.0;              ///< nominal-user to interferer power ratio
    double user_angle_spacing_deg = 22.5;
    double blocker_angle_deg = 78.5;
    bool enable_blocker = false;
    bool zf_on = false;               ///< zero-force when true, conjugate otherwise
    bool add_therm_noise = false;
    int n_symbols = 10000;
    std::uint64_t seed = 0x5eed0d1a;
};

/// Checks hard invariants (throws ConfigError) and returns soft warnings:
/// zero-forcing with pairwise user spacing below the pi/M radian rule of
/// thumb is legal but flagged.
std::vector<std::string> validate_config(const SystemConfig& cfg);

} // namespace dbfsim
