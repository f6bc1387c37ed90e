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

#include "dbfsim/signal.hpp"
#include "dbfsim/tx.hpp"

namespace dbfsim {

/// Line-of-sight channel of a half-wavelength uniform linear array.
/// Column k is the steering vector of transmitter k; path gain is unity
/// (all transmitters equidistant), so every entry has magnitude 1.
struct ChannelMatrix {
    int m = 0;                      ///< receive elements (rows)
    int k = 0;                      ///< transmitters (columns)
    std::vector<cd> entries;        ///< row-major m x k
    std::vector<double> angles_deg; ///< one angle per column

    cd& at(int row, int col) { return entries[static_cast<std::size_t>(row * k + col)]; }
    const cd& at(int row, int col) const { return entries[static_cast<std::size_t>(row * k + col)]; }
};

/// Angle layout of one simulation point.
struct Placement {
    std::vector<double> angles_deg; ///< all K transmitters
    int interferer_index = -1;      ///< last index when the blocker is enabled
};

/// Element m carries exp(-j*pi*m*sin(theta)) for half-wavelength spacing.
std::vector<cd> steering_vector(double theta_deg, int m_elements);

/// Desired users alternate around broadside (never at it): -s/2, +s/2,
/// -3s/2, +3s/2, ... The blocker, when enabled, is the K-th transmitter
/// at its own angle. Throws AngleRangeError if a placed angle reaches 90 deg.
Placement place_users(int k_transmitters, double spacing_deg, double blocker_angle_deg,
                      bool blocker_enabled);

ChannelMatrix build_channel(const std::vector<double>& angles_deg, int m_elements);

/// Antenna stream m = sum_k H(m,k) * tx_k, sample-wise.
std::vector<SignalBlock> apply_channel(const ChannelMatrix& h, const TxEnsemble& tx);

} // namespace dbfsim
