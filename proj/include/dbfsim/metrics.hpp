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

/// Complex cross-correlation coefficient at the best lag.
struct CorrelationResult {
    cd coeff{0.0, 0.0}; ///< normalized; |coeff| <= 1 (+ rounding)
    int lag = 0;        ///< rx leads ref by `lag` samples
};

/// SNDR above this cap is reported as the cap (residual below measurement
/// resolution).
inline constexpr double kSndrCapDb = 150.0;

/// ENOB constant for unfiltered 16-QAM (PAPR-corrected).
inline constexpr double kEnobConstDb = 4.36;

/// C(l) = <rx(t), ref(t-l)> / (|rx| |ref|), maximized over |l| <= max_lag.
/// Both inputs are mean-centered before correlating. Requires equal lengths
/// and N > 10*max_lag.
CorrelationResult complex_corr(const SignalBlock& rx, const SignalBlock& ref, int max_lag);

/// Cross-correlation SNDR estimate: scale rx and ref to unit power, align
/// ref in phase by arg C, then 10*log10(|C|^2 var(rx') / var(rx' - |C| ref')).
double measure_sndr(const SignalBlock& rx, const SignalBlock& ref, int max_lag = 2);

inline double sndr_to_enob(double sndr_db) { return (sndr_db - kEnobConstDb) / 6.02; }

/// RMS error vector magnitude in percent after gain/phase alignment.
double measure_evm(const SignalBlock& rx, const SignalBlock& ref, int max_lag = 2);

/// Min-distance 16-QAM demapping of the aligned stream against the
/// transmitted bits. Resolution is 1/(4N).
double measure_ber(const SignalBlock& rx, const BitStream& tx_bits, int max_lag = 2);

inline double array_gain(double sndr_out_db, double sndr_in_db) { return sndr_out_db - sndr_in_db; }

/// SIR at which the ENOB-vs-SIR curve last crosses `threshold` from below.
struct SirMinResult {
    enum class Status { crossed, always_above, always_below };
    Status status = Status::crossed;
    double sir_min_db = 0.0; ///< -inf when always_above, +inf when always_below

    bool crossed() const { return status == Status::crossed; }
};

SirMinResult extract_sir_min(const std::vector<double>& sir_grid_db,
                             const std::vector<double>& enob_values, double threshold = 2.0);

} // namespace dbfsim
