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
#include <vector>

#include "dbfsim/config.hpp"
#include "dbfsim/signal.hpp"

namespace dbfsim {

using BitStream = std::vector<std::uint8_t>;

/// Per-transmitter source signals. Nominal users transmit at unit power;
/// the interferer (last index, when enabled) at 10^(-SIR/10).
struct TxEnsemble {
    std::vector<SignalBlock> streams;   ///< amplitude-scaled symbol streams
    std::vector<BitStream> bit_streams;
    std::vector<double> powers;         ///< linear power per transmitter
    int interferer_index = -1;          ///< -1 when no interferer
};

/// Seeded i.i.d. equiprobable bit source standing in for the PRBS.
BitStream gen_prbs(std::size_t n_bits, std::uint64_t stream_seed);

/// 4 bits per symbol, Gray-coded per axis. Length must divide by 4.
SignalBlock qam16_map(const BitStream& bits);

/// K independent modulated streams with per-transmitter power scaling.
TxEnsemble build_tx_ensemble(const SystemConfig& cfg);

} // namespace dbfsim
