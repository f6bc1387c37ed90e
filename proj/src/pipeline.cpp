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

#include "dbfsim/pipeline.hpp"

#include "dbfsim/beamformer.hpp"
#include "dbfsim/channel.hpp"
#include "dbfsim/metrics.hpp"
#include "dbfsim/rx_frontend.hpp"
#include "dbfsim/tx.hpp"

namespace dbfsim {

std::vector<MetricsRecord> run_single(const SystemConfig& cfg) {
    validate_config(cfg);

    const TxEnsemble tx = build_tx_ensemble(cfg);
    const Placement placement = place_users(cfg.k_transmitters, cfg.user_angle_spacing_deg,
                                            cfg.blocker_angle_deg, cfg.enable_blocker);
    const ChannelMatrix h = build_channel(placement.angles_deg, cfg.m_elements);

    std::vector<SignalBlock> antennas = apply_channel(h, tx);
    add_thermal_noise(antennas, cfg.snr_therm_db, cfg.add_therm_noise, cfg.seed);

    // reference channel for array gain: antenna 0 after the LNA, before ADC
    const SignalBlock antenna0_pre_adc = antennas[0];

    const QuantizerSpec adc{cfg.adc_bits, kAdcFullScale};
    for (SignalBlock& s : antennas) s = quantize_midtread(vga_normalize(s), adc);

    const BeamformerMatrix g = cfg.zf_on ? zeroforce_matrix(h) : conjugate_matrix(h);
    const std::vector<SignalBlock> rec = apply_beamformer(g, antennas);

    const int n_desired = cfg.enable_blocker ? cfg.k_transmitters - 1 : cfg.k_transmitters;
    std::vector<MetricsRecord> out;
    out.reserve(static_cast<std::size_t>(n_desired));
    for (int u = 0; u < n_desired; ++u) {
        const std::size_t ui = static_cast<std::size_t>(u);
        // unit-power reference: nominal users transmit at power 1 already
        const SignalBlock& ref = tx.streams[ui];

        MetricsRecord r;
        r.user_index = u;
        r.sndr_db = measure_sndr(rec[ui], ref);
        r.enob = sndr_to_enob(r.sndr_db);
        r.evm_rms_pct = measure_evm(rec[ui], ref);
        r.ber = measure_ber(rec[ui], tx.bit_streams[ui]);
        const double sndr_in = measure_sndr(antenna0_pre_adc, ref);
        r.array_gain_db = array_gain(r.sndr_db, sndr_in);
        out.push_back(r);
    }
    return out;
}

} // namespace dbfsim
