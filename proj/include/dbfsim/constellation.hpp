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

#include <array>
#include <cmath>
#include <cstdint>

#include "dbfsim/signal.hpp"

namespace dbfsim {

/// 16-QAM on the {+-1, +-3} x {+-1, +-3} grid scaled to unit mean power.
/// Per axis the two leading bits select the level through a Gray code, so
/// adjacent levels differ in exactly one bit. Bit order within a symbol:
/// b0 b1 -> I level, b2 b3 -> Q level.
namespace qam16 {

inline constexpr double kAxisScale = 0.31622776601683794; // 1/sqrt(10)
inline constexpr double kPeakPower = 1.8;                 // (3^2+3^2)/10

/// Gray map for one axis: (b_hi, b_lo) -> level in units of kAxisScale.
inline constexpr std::array<int, 4> kGrayLevel = {
    -3, // 00
    -1, // 01
    +3, // 10
    +1, // 11
};

inline int axis_level(int b_hi, int b_lo) { return kGrayLevel[static_cast<std::size_t>((b_hi << 1) | b_lo)]; }

/// Symbol for one 4-bit group.
inline cd map_bits(int b0, int b1, int b2, int b3) {
    return {axis_level(b0, b1) * kAxisScale, axis_level(b2, b3) * kAxisScale};
}

/// Nearest level index on one axis for min-distance demapping.
inline int nearest_level(double v) {
    static constexpr std::array<int, 4> levels = {-3, -1, 1, 3};
    int best = 0;
    double best_d = 1e300;
    for (int i = 0; i < 4; ++i) {
        const double d = std::abs(v - levels[static_cast<std::size_t>(i)] * kAxisScale);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return levels[static_cast<std::size_t>(best)];
}

/// Bits (b_hi, b_lo) for a level in {-3,-1,1,3}.
inline std::array<std::uint8_t, 2> level_bits(int level) {
    switch (level) {
        case -3: return {0, 0};
        case -1: return {0, 1};
        case +3: return {1, 0};
        default: return {1, 1};
    }
}

} // namespace qam16
} // namespace dbfsim
