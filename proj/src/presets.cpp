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

#include "dbfsim/presets.hpp"

#include <map>
#include <sstream>

#include "dbfsim/errors.hpp"

namespace dbfsim {

namespace {

SweepAxis axis(SweepVar var, double start, double stop, double step, bool log2 = false) {
    return SweepAxis{var, start, stop, step, log2};
}

struct PresetEntry {
    std::string description;
    SweepSpec spec;
};

std::map<std::string, PresetEntry> build_registry() {
    std::map<std::string, PresetEntry> reg;

    // Interference vs quantization studies: SNDR vs SIR with a B curve family.
    {
        SweepSpec s;
        s.base.m_elements = 1;
        s.base.k_transmitters = 2;
        s.base.enable_blocker = true;
        s.base.add_therm_noise = false;
        s.axes = {axis(SweepVar::b, 1, 5, 1), axis(SweepVar::sir, -30, 30, 2.5)};
        s.output = OutputMetric::sndr;
        s.name = "fig7a";
        reg["fig7a"] = {"SNDR vs SIR, single element, B = 1..5, no thermal noise", s};

        s.base.m_elements = 16;
        s.base.zf_on = false;
        s.name = "fig7b";
        reg["fig7b"] = {"SNDR vs SIR, M = 16 conjugate beamforming, B = 1..5", s};

        s.base.zf_on = true;
        s.name = "fig7c";
        reg["fig7c"] = {"SNDR vs SIR, M = 16 zero-force beamforming, B = 1..5", s};

        s.base.add_therm_noise = true;
        s.base.snr_therm_db = 20.0;
        s.axes = {axis(SweepVar::b, 2, 10, 2), axis(SweepVar::sir, -30, 30, 2.5)};
        s.name = "fig8";
        reg["fig8"] = {"SNDR vs SIR, M = 16 zero-force, SNR_therm = 20 dB, B = 2..10", s};

        s.output = OutputMetric::enob;
        s.name = "fig9";
        reg["fig9"] = {"ENOB vs SIR, M = 16 zero-force, SNR_therm = 20 dB (ENOB = 2 line gives SIR_min)", s};
    }

    // SIR_min surface over array size and resolution.
    {
        SweepSpec s;
        s.base.k_transmitters = 2;
        s.base.enable_blocker = true;
        s.base.zf_on = true;
        s.base.add_therm_noise = false;
        s.axes = {axis(SweepVar::m, 4, 64, 2, true), axis(SweepVar::b, 2, 6, 1),
                  axis(SweepVar::sir, -40, 5, 2.5)};
        s.output = OutputMetric::sir_min;
        s.log_x = true;
        s.name = "fig10";
        reg["fig10"] = {"SIR_min vs M for B = 2..6, zero-force, inner SIR sweep", s};
    }

    // BER waterfalls vs thermal noise.
    {
        SweepSpec s;
        s.base.m_elements = 1;
        s.base.k_transmitters = 1;
        s.base.add_therm_noise = true;
        s.base.n_symbols = 100000;
        s.axes = {axis(SweepVar::b, 1, 6, 1), axis(SweepVar::snr_therm, 0, 30, 2.5)};
        s.output = OutputMetric::ber;
        s.log_y = true;
        s.name = "fig11";
        reg["fig11"] = {"BER vs SNR_therm, single element, B = 1..6", s};

        s.base.m_elements = 16;
        s.base.zf_on = true;
        s.axes = {axis(SweepVar::b, 1, 4, 1), axis(SweepVar::snr_therm, 0, 30, 2.5)};
        s.name = "fig12";
        reg["fig12"] = {"BER vs SNR_therm, M = 16 zero-force, B = 1..4", s};
    }

    // BER vs thermal noise and interference.
    {
        SweepSpec s;
        s.base.m_elements = 1;
        s.base.k_transmitters = 2;
        s.base.enable_blocker = true;
        s.base.add_therm_noise = true;
        s.base.n_symbols = 100000;
        s.axes = {axis(SweepVar::b, 2, 6, 2), axis(SweepVar::snr_therm, 0, 30, 5),
                  axis(SweepVar::sir, -20, 20, 10)};
        s.output = OutputMetric::ber;
        s.log_y = true;
        s.name = "fig13";
        reg["fig13"] = {"BER vs SNR_therm and SIR, single element, B = 2,4,6", s};

        s.base.m_elements = 16;
        s.base.zf_on = false;
        s.name = "fig14a";
        reg["fig14a"] = {"BER vs SNR_therm and SIR, M = 16 conjugate, B = 2,4,6", s};

        s.base.zf_on = true;
        s.name = "fig14b";
        reg["fig14b"] = {"BER vs SNR_therm and SIR, M = 16 zero-force, B = 2,4,6", s};
    }

    // One-bit case study.
    {
        SweepSpec s;
        s.base.k_transmitters = 1;
        s.base.adc_bits = 1;
        s.base.zf_on = true;
        s.base.add_therm_noise = true;
        s.base.n_symbols = 200000;
        s.axes = {axis(SweepVar::m, 4, 64, 4, true), axis(SweepVar::snr_therm, 0, 30, 2.5)};
        s.output = OutputMetric::ber;
        s.log_y = true;
        s.name = "fig15";
        reg["fig15"] = {"BER vs SNR_therm with one-bit ADCs, M = 4, 16, 64, zero-force", s};
    }

    // User-count studies.
    {
        SweepSpec s;
        s.base.m_elements = 16;
        s.base.adc_bits = 5;
        s.base.zf_on = true;
        s.base.add_therm_noise = false;
        s.axes = {axis(SweepVar::k, 1, 16, 2, true)};
        s.output = OutputMetric::sndr;
        s.name = "fig16";
        reg["fig16"] = {"SNDR vs K, M = 16, B = 5, zero-force, no interferer", s};

        s.axes = {axis(SweepVar::b, 3, 6, 1), axis(SweepVar::k, 1, 16, 2, true)};
        s.output = OutputMetric::enob;
        s.name = "fig17";
        reg["fig17"] = {"ENOB vs K for B = 3..6, M = 16, zero-force", s};

        s.base.enable_blocker = true;
        s.base.adc_bits = 5;
        s.axes = {axis(SweepVar::k, 2, 8, 2, true), axis(SweepVar::sir, -30, 30, 2.5)};
        s.output = OutputMetric::sndr;
        s.name = "fig18";
        reg["fig18"] = {"SNDR vs SIR for K = 2, 4, 8, M = 16, B = 5, zero-force", s};
    }

    return reg;
}

const std::map<std::string, PresetEntry>& registry() {
    static const std::map<std::string, PresetEntry> reg = build_registry();
    return reg;
}

} // namespace

SweepSpec load_preset(const std::string& name) {
    const auto& reg = registry();
    const auto it = reg.find(name);
    if (it == reg.end()) {
        std::ostringstream os;
        os << "unknown preset '" << name << "'; available:";
        for (const auto& [key, entry] : reg) os << " " << key;
        throw ConfigError(os.str());
    }
    return it->second.spec;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [key, entry] : registry()) names.push_back(key);
    return names;
}

std::string preset_description(const std::string& name) {
    const auto it = registry().find(name);
    return it == registry().end() ? std::string{} : it->second.description;
}

} // namespace dbfsim
