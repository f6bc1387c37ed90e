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

#include "dbfsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dbfsim/constellation.hpp"
#include "dbfsim/errors.hpp"

namespace dbfsim {

namespace {

SignalBlock centered(const SignalBlock& s) {
    const cd mu = mean_value(s);
    SignalBlock out(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) out[t] = s[t] - mu;
    return out;
}

/// rx centered, scaled to unit power, and de-rotated by the correlation
/// phase; the common front half of the EVM and BER paths.
SignalBlock aligned_rx(const SignalBlock& rx, const SignalBlock& ref, int max_lag, int* lag_out) {
    const CorrelationResult c = complex_corr(rx, ref, max_lag);
    if (lag_out) *lag_out = c.lag;
    SignalBlock rxc = centered(rx);
    const double p = mean_power(rxc);
    const cd derot = std::conj(c.coeff) / std::abs(c.coeff) / std::sqrt(p);
    for (cd& x : rxc) x *= derot;
    return rxc;
}

} // namespace

CorrelationResult complex_corr(const SignalBlock& rx, const SignalBlock& ref, int max_lag) {
    if (rx.size() != ref.size()) throw DimensionError("complex_corr: unequal lengths");
    const std::size_t n = rx.size();
    if (max_lag < 0 || (max_lag > 0 && n <= static_cast<std::size_t>(10 * max_lag)))
        throw std::invalid_argument("complex_corr: need N > 10*max_lag");

    const SignalBlock a = centered(rx);
    const SignalBlock b = centered(ref);
    const double na = std::sqrt(mean_power(a) * static_cast<double>(n));
    const double nb = std::sqrt(mean_power(b) * static_cast<double>(n));
    if (na <= 0.0) throw ZeroPowerError("complex_corr: rx");
    if (nb <= 0.0) throw ZeroPowerError("complex_corr: ref");

    CorrelationResult best;
    double best_mag = -1.0;
    for (int lag = -max_lag; lag <= max_lag; ++lag) {
        // overlap of rx(t) with ref(t - lag)
        const std::size_t t0 = static_cast<std::size_t>(std::max(0, lag));
        const std::size_t t1 = n - static_cast<std::size_t>(std::max(0, -lag));
        cd acc{0.0, 0.0};
        for (std::size_t t = t0; t < t1; ++t)
            acc += a[t] * std::conj(b[t - static_cast<std::size_t>(lag)]);
        const cd coeff = acc / (na * nb);
        if (std::abs(coeff) > best_mag) {
            best_mag = std::abs(coeff);
            best.coeff = coeff;
            best.lag = lag;
        }
    }
    return best;
}

double measure_sndr(const SignalBlock& rx, const SignalBlock& ref, int max_lag) {
    const CorrelationResult c = complex_corr(rx, ref, max_lag);
    const double mag = std::abs(c.coeff);

    SignalBlock a = centered(rx);
    SignalBlock b = centered(ref);
    const double pa = mean_power(a);
    const double pb = mean_power(b);
    const cd ref_rot = c.coeff / mag; // align ref in phase with rx

    // residual over the overlap at the winning lag
    const std::size_t n = a.size();
    const std::size_t t0 = static_cast<std::size_t>(std::max(0, c.lag));
    const std::size_t t1 = n - static_cast<std::size_t>(std::max(0, -c.lag));
    double resid = 0.0;
    const double sa = 1.0 / std::sqrt(pa);
    const double sb = 1.0 / std::sqrt(pb);
    for (std::size_t t = t0; t < t1; ++t) {
        const cd d = a[t] * sa - mag * ref_rot * b[t - static_cast<std::size_t>(c.lag)] * sb;
        resid += std::norm(d);
    }
    resid /= static_cast<double>(t1 - t0);

    const double signal = mag * mag; // var(rx') = 1 after normalization
    if (resid < 1e-12 * 1.0) return kSndrCapDb;
    const double sndr = 10.0 * std::log10(signal / resid);
    return std::min(sndr, kSndrCapDb);
}

double measure_evm(const SignalBlock& rx, const SignalBlock& ref, int max_lag) {
    int lag = 0;
    const SignalBlock rxa = aligned_rx(rx, ref, max_lag, &lag);
    SignalBlock b = centered(ref);
    const double pb = mean_power(b);
    if (pb <= 0.0) throw ZeroPowerError("measure_evm: ref");
    const double sb = 1.0 / std::sqrt(pb);

    const std::size_t n = rxa.size();
    const std::size_t t0 = static_cast<std::size_t>(std::max(0, lag));
    const std::size_t t1 = n - static_cast<std::size_t>(std::max(0, -lag));
    double err = 0.0;
    double refp = 0.0;
    for (std::size_t t = t0; t < t1; ++t) {
        const cd r = b[t - static_cast<std::size_t>(lag)] * sb;
        err += std::norm(rxa[t] - r);
        refp += std::norm(r);
    }
    return 100.0 * std::sqrt(err / refp);
}

double measure_ber(const SignalBlock& rx, const BitStream& tx_bits, int max_lag) {
    if (tx_bits.size() != 4 * rx.size())
        throw DimensionError("measure_ber: bit count != 4 * symbol count");

    // Reference symbols regenerated from the bits themselves.
    SignalBlock ref(rx.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const std::size_t b = 4 * i;
        ref[i] = qam16::map_bits(tx_bits[b], tx_bits[b + 1], tx_bits[b + 2], tx_bits[b + 3]);
    }

    int lag = 0;
    const SignalBlock rxa = aligned_rx(rx, ref, max_lag, &lag);

    const std::size_t n = rxa.size();
    const std::size_t t0 = static_cast<std::size_t>(std::max(0, lag));
    const std::size_t t1 = n - static_cast<std::size_t>(std::max(0, -lag));
    std::size_t errors = 0;
    for (std::size_t t = t0; t < t1; ++t) {
        const std::size_t sym = t - static_cast<std::size_t>(lag);
        const int li = qam16::nearest_level(rxa[t].real());
        const int lq = qam16::nearest_level(rxa[t].imag());
        const auto bi = qam16::level_bits(li);
        const auto bq = qam16::level_bits(lq);
        const std::size_t b = 4 * sym;
        errors += static_cast<std::size_t>(bi[0] != tx_bits[b]) +
                  static_cast<std::size_t>(bi[1] != tx_bits[b + 1]) +
                  static_cast<std::size_t>(bq[0] != tx_bits[b + 2]) +
                  static_cast<std::size_t>(bq[1] != tx_bits[b + 3]);
    }
    return static_cast<double>(errors) / (4.0 * static_cast<double>(t1 - t0));
}

SirMinResult extract_sir_min(const std::vector<double>& sir_grid_db,
                             const std::vector<double>& enob_values, double threshold) {
    if (sir_grid_db.size() != enob_values.size())
        throw DimensionError("extract_sir_min: grid and values differ in length");
    if (sir_grid_db.size() < 2) throw std::invalid_argument("extract_sir_min: need >= 2 points");
    for (std::size_t i = 1; i < sir_grid_db.size(); ++i)
        if (!(sir_grid_db[i] > sir_grid_db[i - 1]))
            throw std::invalid_argument("extract_sir_min: grid must be strictly ascending");

    SirMinResult res;
    bool any_below = false;
    bool any_above = false;
    for (double e : enob_values) {
        (e < threshold ? any_below : any_above) = true;
    }
    if (!any_below) {
        res.status = SirMinResult::Status::always_above;
        res.sir_min_db = -std::numeric_limits<double>::infinity();
        return res;
    }
    if (!any_above) {
        res.status = SirMinResult::Status::always_below;
        res.sir_min_db = std::numeric_limits<double>::infinity();
        return res;
    }

    // last crossing from below
    for (std::size_t i = sir_grid_db.size() - 1; i >= 1; --i) {
        if (enob_values[i - 1] < threshold && enob_values[i] >= threshold) {
            const double f = (threshold - enob_values[i - 1]) / (enob_values[i] - enob_values[i - 1]);
            res.status = SirMinResult::Status::crossed;
            res.sir_min_db = sir_grid_db[i - 1] + f * (sir_grid_db[i] - sir_grid_db[i - 1]);
            return res;
        }
    }
    // values straddle the threshold but only cross downward; report the
    // highest SIR at which the curve is still below as the conservative edge
    res.status = SirMinResult::Status::crossed;
    res.sir_min_db = sir_grid_db.back();
    return res;
}

} // namespace dbfsim
