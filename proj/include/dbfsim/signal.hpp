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

#include <complex>
#include <vector>

namespace dbfsim {

using cd = std::complex<double>;

/// One complex-envelope stream, one sample per symbol.
using SignalBlock = std::vector<cd>;

/// Mean |x|^2 over the block.
inline double mean_power(const SignalBlock& s) {
    double acc = 0.0;
    for (const cd& x : s) acc += std::norm(x);
    return s.empty() ? 0.0 : acc / static_cast<double>(s.size());
}

inline cd mean_value(const SignalBlock& s) {
    cd acc{0.0, 0.0};
    for (const cd& x : s) acc += x;
    return s.empty() ? cd{0.0, 0.0} : acc / static_cast<double>(s.size());
}

inline double db_from_linear(double x) { return 10.0 * std::log10(x); }
inline double linear_from_db(double x_db) { return std::pow(10.0, x_db / 10.0); }

} // namespace dbfsim
