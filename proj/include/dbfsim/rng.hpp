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
#include <cstdint>
#include <numbers>
#include <random>

#include "dbfsim/signal.hpp"

namespace dbfsim {

/// Substream roles hashed into derived seeds. Keeps bit generation and
/// noise generation independent even when indices collide.
enum class StreamKind : std::uint64_t {
    bits = 0x9b5ad4,
    noise = 0x1f83d9,
    cell = 0x243f6a,
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
} // namespace detail

/// Counter-based seed split: every (grid cell, stream) pair gets an
/// independent substream from the single master seed, so results do not
/// depend on evaluation order or worker count.
inline std::uint64_t derive_seed(std::uint64_t base, StreamKind kind, std::uint64_t index) {
    std::uint64_t h = detail::splitmix64(base ^ static_cast<std::uint64_t>(kind));
    return detail::splitmix64(h ^ detail::splitmix64(index));
}

/// Deterministic random source. Uniform and Gaussian draws are built
/// directly on the mt19937_64 word stream (not std distributions, whose
/// algorithms are implementation-defined), so a given seed reproduces the
/// same samples everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t word() { return eng_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// One equiprobable bit; consumes buffered words 64 bits at a time.
    int bit() {
        if (bits_left_ == 0) {
            bit_buf_ = eng_();
            bits_left_ = 64;
        }
        const int b = static_cast<int>(bit_buf_ & 1u);
        bit_buf_ >>= 1;
        --bits_left_;
        return b;
    }

    /// Standard normal via Box-Muller; second value cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Circularly-symmetric complex Gaussian with total power `power`.
    cd complex_gaussian(double power) {
        const double s = std::sqrt(power / 2.0);
        const double re = s * gaussian();
        const double im = s * gaussian();
        return {re, im};
    }

private:
    std::mt19937_64 eng_;
    std::uint64_t bit_buf_ = 0;
    int bits_left_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace dbfsim
