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

#include "dbfsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dbfsim/channel.hpp"
#include "dbfsim/errors.hpp"

namespace dbfsim {

std::vector<std::string> validate_config(const SystemConfig& cfg) {
    if (cfg.m_elements < 1) throw ConfigError("M must be >= 1");
    if (cfg.k_transmitters < 1) throw ConfigError("K must be >= 1");
    if (cfg.adc_bits < 1) throw ConfigError("B must be >= 1");
    if (cfg.n_symbols < 1) throw ConfigError("n_symbols must be >= 1");
    if (cfg.enable_blocker && cfg.k_transmitters < 2)
        throw ConfigError("blocker enabled requires K >= 2");
    if (cfg.zf_on && cfg.m_elements < cfg.k_transmitters)
        throw ConfigError("zero-forcing requires M >= K");
    if (std::abs(cfg.blocker_angle_deg) >= 90.0 && cfg.enable_blocker)
        throw ConfigError("blocker angle must lie in (-90, 90) degrees");

    std::vector<std::string> warnings;

    if (cfg.zf_on && cfg.k_transmitters >= 2) {
        // pi/M radian rule of thumb on the minimum pairwise separation
        const Placement p = place_users(cfg.k_transmitters, cfg.user_angle_spacing_deg,
                                        cfg.blocker_angle_deg, cfg.enable_blocker);
        std::vector<double> sorted = p.angles_deg;
        std::sort(sorted.begin(), sorted.end());
        double min_sep_rad = 1e300;
        for (std::size_t i = 1; i < sorted.size(); ++i)
            min_sep_rad = std::min(min_sep_rad, (sorted[i] - sorted[i - 1]) * std::numbers::pi / 180.0);
        const double limit = std::numbers::pi / cfg.m_elements;
        if (min_sep_rad < limit) {
            std::ostringstream os;
            os << "zero-forcing with minimum angular separation " << min_sep_rad
               << " rad below the pi/M rule of thumb (" << limit << " rad)";
            warnings.push_back(os.str());
        }
    }
    return warnings;
}

} // namespace dbfsim
