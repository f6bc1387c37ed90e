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

#include "dbfsim/beamformer.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <sstream>

#include "dbfsim/errors.hpp"

namespace dbfsim {

namespace {
constexpr double kConditionLimit = 1e12;

Eigen::MatrixXcd to_eigen(const ChannelMatrix& h) {
    Eigen::MatrixXcd e(h.m, h.k);
    for (int r = 0; r < h.m; ++r)
        for (int c = 0; c < h.k; ++c) e(r, c) = h.at(r, c);
    return e;
}
} // namespace

BeamformerMatrix conjugate_matrix(const ChannelMatrix& h) {
    BeamformerMatrix g;
    g.k = h.k;
    g.m = h.m;
    g.kind = BeamformerKind::conjugate;
    g.entries.resize(static_cast<std::size_t>(g.k) * static_cast<std::size_t>(g.m));
    for (int r = 0; r < g.k; ++r)
        for (int c = 0; c < g.m; ++c) g.at(r, c) = std::conj(h.at(c, r));
    return g;
}

BeamformerMatrix zeroforce_matrix(const ChannelMatrix& h) {
    if (h.m < h.k) {
        std::ostringstream os;
        os << "zero-forcing needs M >= K, got M=" << h.m << " K=" << h.k;
        throw DimensionError(os.str());
    }
    const Eigen::MatrixXcd he = to_eigen(h);
    const Eigen::MatrixXcd gram = he.adjoint() * he; // K x K Hermitian

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gram);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin <= 0.0 || sv(0) / smin > kConditionLimit) {
        std::ostringstream os;
        os << "cond(H^H H) = " << (smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity())
           << " exceeds " << kConditionLimit << " (users too close in angle?)";
        throw IllConditionedError(os.str());
    }

    // Solve (H^H H) G = H^H instead of forming the inverse.
    const Eigen::MatrixXcd ge = gram.ldlt().solve(he.adjoint());

    BeamformerMatrix g;
    g.k = h.k;
    g.m = h.m;
    g.kind = BeamformerKind::zero_force;
    g.entries.resize(static_cast<std::size_t>(g.k) * static_cast<std::size_t>(g.m));
    for (int r = 0; r < g.k; ++r)
        for (int c = 0; c < g.m; ++c) g.at(r, c) = ge(r, c);
    return g;
}

std::vector<SignalBlock> apply_beamformer(const BeamformerMatrix& g,
                                          const std::vector<SignalBlock>& antenna_streams) {
    if (static_cast<int>(antenna_streams.size()) != g.m)
        throw DimensionError("apply_beamformer: antenna count != beamformer columns");
    const std::size_t n = antenna_streams.empty() ? 0 : antenna_streams.front().size();
    for (const SignalBlock& s : antenna_streams)
        if (s.size() != n) throw DimensionError("apply_beamformer: unequal stream lengths");

    std::vector<SignalBlock> out(static_cast<std::size_t>(g.k));
    for (int k = 0; k < g.k; ++k) {
        SignalBlock& r = out[static_cast<std::size_t>(k)];
        r.assign(n, cd{0.0, 0.0});
        for (int m = 0; m < g.m; ++m) {
            const cd w = g.at(k, m);
            const SignalBlock& y = antenna_streams[static_cast<std::size_t>(m)];
            for (std::size_t t = 0; t < n; ++t) r[t] += w * y[t];
        }
    }
    return out;
}

double zeroforce_residual(const BeamformerMatrix& g, const ChannelMatrix& h) {
    double worst = 0.0;
    for (int r = 0; r < g.k; ++r) {
        for (int c = 0; c < h.k; ++c) {
            cd acc{0.0, 0.0};
            for (int m = 0; m < g.m; ++m) acc += g.at(r, m) * h.at(m, c);
            const cd target = (r == c) ? cd{1.0, 0.0} : cd{0.0, 0.0};
            worst = std::max(worst, std::abs(acc - target));
        }
    }
    return worst;
}

} // namespace dbfsim
