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

#include "dbfsim/channel.hpp"
#include "dbfsim/signal.hpp"

namespace dbfsim {

enum class BeamformerKind { conjugate, zero_force };

/// K x M combining matrix built from the ideal channel estimate.
struct BeamformerMatrix {
    int k = 0;
    int m = 0;
    std::vector<cd> entries; ///< row-major k x m
    BeamformerKind kind = BeamformerKind::conjugate;

    cd& at(int row, int col) { return entries[static_cast<std::size_t>(row * m + col)]; }
    const cd& at(int row, int col) const { return entries[static_cast<std::size_t>(row * m + col)]; }
};

/// G = H^H. Maximizes beamformed signal energy, no interference nulling.
BeamformerMatrix conjugate_matrix(const ChannelMatrix& h);

/// G = (H^H H)^{-1} H^H, computed by solving the K x K Gram system rather
/// than inverting. Throws DimensionError when M < K and IllConditionedError
/// when cond(H^H H) exceeds 1e12 (users too close in angle).
BeamformerMatrix zeroforce_matrix(const ChannelMatrix& h);

/// Stream k = sum_m G(k,m) * antenna_m, sample-wise.
std::vector<SignalBlock> apply_beamformer(const BeamformerMatrix& g,
                                          const std::vector<SignalBlock>& antenna_streams);

/// max |G*H - I| over all entries; the zero-force residual check.
double zeroforce_residual(const BeamformerMatrix& g, const ChannelMatrix& h);

} // namespace dbfsim
