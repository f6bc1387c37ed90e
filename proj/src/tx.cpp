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

#include "dbfsim/tx.hpp"

#include <cmath>
#include <stdexcept>

#include "dbfsim/constellation.hpp"
#include "dbfsim/errors.hpp"
#include "dbfsim/rng.hpp"

namespace dbfsim {

BitStream gen_prbs(std::size_t n_bits, std::uint64_t stream_seed) {
    if (n_bits == 0) throw std::invalid_argument("gen_prbs: n_bits must be > 0");
    Rng rng(stream_seed);
    BitStream bits(n_bits);
    for (std::size_t i = 0; i < n_bits; ++i) bits[i] = static_cast<std::uint8_t>(rng.bit());
    return bits;
}

SignalBlock qam16_map(const BitStream& bits) {
    if (bits.empty() || bits.size() % 4 != 0)
        throw std::invalid_argument("qam16_map: bit count must be a positive multiple of 4");
    SignalBlock out(bits.size() / 4);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t b = 4 * i;
        out[i] = qam16::map_bits(bits[b], bits[b + 1], bits[b + 2], bits[b + 3]);
    }
    return out;
}

TxEnsemble build_tx_ensemble(const SystemConfig& cfg) {
    const int k = cfg.k_transmitters;
    const std::size_t n_bits = 4 * static_cast<std::size_t>(cfg.n_symbols);

    TxEnsemble tx;
    tx.streams.reserve(static_cast<std::size_t>(k));
    tx.bit_streams.reserve(static_cast<std::size_t>(k));
    tx.powers.assign(static_cast<std::size_t>(k), 1.0);
    if (cfg.enable_blocker) {
        tx.interferer_index = k - 1;
        tx.powers[static_cast<std::size_t>(k - 1)] = std::pow(10.0, -cfg.sir_db / 10.0);
    }

    for (int u = 0; u < k; ++u) {
        BitStream bits = gen_prbs(n_bits, derive_seed(cfg.seed, StreamKind::bits, static_cast<std::uint64_t>(u)));
        SignalBlock s = qam16_map(bits);
        const double amp = std::sqrt(tx.powers[static_cast<std::size_t>(u)]);
        if (amp != 1.0)
            for (cd& x : s) x *= amp;
        tx.bit_streams.push_back(std::move(bits));
        tx.streams.push_back(std::move(s));
    }
    return tx;
}

} // namespace dbfsim
