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

#include "dbfsim/channel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dbfsim/errors.hpp"

namespace dbfsim {

std::vector<cd> steering_vector(double theta_deg, int m_elements) {
    const double s = std::sin(theta_deg * std::numbers::pi / 180.0);
    std::vector<cd> v(static_cast<std::size_t>(m_elements));
    for (int m = 0; m < m_elements; ++m) {
        const double phase = -std::numbers::pi * m * s;
        v[static_cast<std::size_t>(m)] = std::polar(1.0, phase);
    }
    return v;
}

Placement place_users(int k_transmitters, double spacing_deg, double blocker_angle_deg,
                      bool blocker_enabled) {
    if (k_transmitters < 1) throw ConfigError("place_users: K must be >= 1");
    if (blocker_enabled && k_transmitters < 2) throw ConfigError("place_users: blocker requires K >= 2");

    const int n_desired = blocker_enabled ? k_transmitters - 1 : k_transmitters;
    Placement p;
    p.angles_deg.reserve(static_cast<std::size_t>(k_transmitters));
    for (int i = 1; i <= n_desired; ++i) {
        // -s/2, +s/2, -3s/2, +3s/2, ... around broadside, never at it
        const double mag = (2 * ((i + 1) / 2) - 1) * spacing_deg / 2.0;
        p.angles_deg.push_back((i % 2 == 1) ? -mag : mag);
    }
    if (blocker_enabled) {
        p.angles_deg.push_back(blocker_angle_deg);
        p.interferer_index = k_transmitters - 1;
    }
    for (double a : p.angles_deg) {
        if (std::abs(a) >= 90.0) {
            std::ostringstream os;
            os << "placed angle " << a << " deg reaches end-fire";
            throw AngleRangeError(os.str());
        }
    }
    return p;
}

ChannelMatrix build_channel(const std::vector<double>& angles_deg, int m_elements) {
    ChannelMatrix h;
    h.m = m_elements;
    h.k = static_cast<int>(angles_deg.size());
    h.angles_deg = angles_deg;
    h.entries.resize(static_cast<std::size_t>(h.m) * static_cast<std::size_t>(h.k));
    for (int col = 0; col < h.k; ++col) {
        const std::vector<cd> sv = steering_vector(angles_deg[static_cast<std::size_t>(col)], m_elements);
        for (int row = 0; row < h.m; ++row) h.at(row, col) = sv[static_cast<std::size_t>(row)];
    }
    return h;
}

std::vector<SignalBlock> apply_channel(const ChannelMatrix& h, const TxEnsemble& tx) {
    if (static_cast<int>(tx.streams.size()) != h.k)
        throw DimensionError("apply_channel: stream count != channel columns");
    const std::size_t n = tx.streams.empty() ? 0 : tx.streams.front().size();
    for (const SignalBlock& s : tx.streams)
        if (s.size() != n) throw DimensionError("apply_channel: unequal stream lengths");

    std::vector<SignalBlock> antennas(static_cast<std::size_t>(h.m));
    for (int m = 0; m < h.m; ++m) {
        SignalBlock& out = antennas[static_cast<std::size_t>(m)];
        out.assign(n, cd{0.0, 0.0});
        for (int k = 0; k < h.k; ++k) {
            const cd gain = h.at(m, k);
            const SignalBlock& s = tx.streams[static_cast<std::size_t>(k)];
            for (std::size_t t = 0; t < n; ++t) out[t] += gain * s[t];
        }
    }
    return antennas;
}

} // namespace dbfsim
