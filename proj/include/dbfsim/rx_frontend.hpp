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

#include "dbfsim/signal.hpp"

namespace dbfsim {

/// Per-axis full scale used by the receive pipeline. FS^2/2 equals the unit
/// mean power the VGA presents, the same full-scale convention behind the
/// 6.02B - 1.76 quantizer law, and FS exceeds the per-axis peak sqrt(1.8) of
/// an arbitrarily phase-rotated unit-power 16-QAM stream, so a lone
/// full-scale signal never clips.
inline constexpr double kAdcFullScale = 1.4142135623730951;

/// Mid-tread B-bit quantizer, applied independently to I and Q.
struct QuantizerSpec {
    int bits = 5;
    double full_scale = kAdcFullScale;

    double step() const { return 2.0 * full_scale / static_cast<double>(1 << bits); }
};

/// Adds independent circularly-symmetric Gaussian noise per antenna with
/// power 10^(-snr_therm_db/10) relative to one nominal user's per-element
/// received power (= 1). Identity when disabled.
void add_thermal_noise(std::vector<SignalBlock>& antenna_streams, double snr_therm_db, bool enabled,
                       std::uint64_t cell_seed);

/// Ideal block-level VGA: scales one receive chain so its mean power equals
/// the unit-power ideal constellation. Pure real gain, no phase change.
SignalBlock vga_normalize(const SignalBlock& stream);

/// y = clamp(step*round(x/step), -2^(B-1)*step, (2^(B-1)-1)*step) per axis.
/// B = 1 degenerates to the symmetric ternary set {-step, 0, +step} (the
/// clip rails meet at +-step), which keeps the one-bit path sign-symmetric.
SignalBlock quantize_midtread(const SignalBlock& stream, const QuantizerSpec& spec);

} // namespace dbfsim
