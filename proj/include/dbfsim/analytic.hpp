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

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dbfsim::analytic {

inline constexpr double kInfSir = std::numeric_limits<double>::infinity();

/// Nominal SQNR of a B-bit quantizer with full scale allocated to the signal.
inline double sqnr_nom(int bits) { return 6.02 * bits - 1.76; }

/// Full-scale sharing with one interferer: SQNR_nom - 10log10(1 + 1/SIR).
inline double sqnr_degraded(int bits, double sir_db) {
    if (std::isinf(sir_db) && sir_db > 0) return sqnr_nom(bits);
    return sqnr_nom(bits) - 10.0 * std::log10(1.0 + std::pow(10.0, -sir_db / 10.0));
}

/// K equal-power users sharing full scale, optionally with the K-th
/// transmitter an interferer at the given SIR:
///   no interferer:  SQNR_nom - 10log10(K)
///   interferer:     SQNR_nom - 10log10((K-1) + 1/SIR)
inline double sqnr_multiuser(int bits, int k_users, double sir_db = kInfSir) {
    if (k_users < 1) throw std::invalid_argument("sqnr_multiuser: K must be >= 1");
    const bool has_interferer = !(std::isinf(sir_db) && sir_db > 0);
    if (!has_interferer) return sqnr_nom(bits) - 10.0 * std::log10(static_cast<double>(k_users));
    if (k_users < 2) throw std::invalid_argument("sqnr_multiuser: interferer requires K >= 2");
    const double share = static_cast<double>(k_users - 1) + std::pow(10.0, -sir_db / 10.0);
    return sqnr_nom(bits) - 10.0 * std::log10(share);
}

/// Parallel (power-additive) combination of noise budgets in dB:
/// -10log10(10^(-a/10) + 10^(-b/10) [+ 10^(-c/10)]).
inline double sndr_parallel(double sqnr_db, double sir_db,
                            double snr_therm_db = std::numeric_limits<double>::infinity()) {
    double acc = 0.0;
    for (double term : {sqnr_db, sir_db, snr_therm_db}) {
        if (!(std::isinf(term) && term > 0)) acc += std::pow(10.0, -term / 10.0);
    }
    if (acc <= 0.0) return std::numeric_limits<double>::infinity();
    return -10.0 * std::log10(acc);
}

} // namespace dbfsim::analytic
