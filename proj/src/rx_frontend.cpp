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

#include "dbfsim/rx_frontend.hpp"

#include <algorithm>
#include <cmath>

#include "dbfsim/errors.hpp"
#include "dbfsim/rng.hpp"

namespace dbfsim {

void add_thermal_noise(std::vector<SignalBlock>& antenna_streams, double snr_therm_db, bool enabled,
                       std::uint64_t cell_seed) {
    if (!enabled) return;
    const double noise_power = std::pow(10.0, -snr_therm_db / 10.0);
    for (std::size_t m = 0; m < antenna_streams.size(); ++m) {
        Rng rng(derive_seed(cell_seed, StreamKind::noise, m));
        for (cd& x : antenna_streams[m]) x += rng.complex_gaussian(noise_power);
    }
}

SignalBlock vga_normalize(const SignalBlock& stream) {
    const double p = mean_power(stream);
    if (p <= 0.0) throw ZeroPowerError("vga_normalize: all-zero input");
    const double gain = 1.0 / std::sqrt(p);
    SignalBlock out(stream.size());
    for (std::size_t t = 0; t < stream.size(); ++t) out[t] = stream[t] * gain;
    return out;
}

SignalBlock quantize_midtread(const SignalBlock& stream, const QuantizerSpec& spec) {
    const double d = spec.step();
    // One-bit keeps both rails: {-d, 0, +d}. B >= 2 clips the positive rail
    // one step short of full scale (even mid-tread level count).
    const double lo = -static_cast<double>(1 << (spec.bits - 1)) * d;
    const double hi = spec.bits == 1 ? d : (static_cast<double>(1 << (spec.bits - 1)) - 1.0) * d;

    auto q = [&](double x) { return std::clamp(d * std::round(x / d), lo, hi); };

    SignalBlock out(stream.size());
    for (std::size_t t = 0; t < stream.size(); ++t)
        out[t] = cd{q(stream[t].real()), q(stream[t].imag())};
    return out;
}

} // namespace dbfsim
