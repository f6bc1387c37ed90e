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

#include "dbfsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <thread>

#include "dbfsim/errors.hpp"
#include "dbfsim/metrics.hpp"
#include "dbfsim/rng.hpp"

namespace dbfsim {

namespace {
constexpr const char* kToolVersion = "0.1.0";

std::string iso_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

void apply_axis(SystemConfig& cfg, SweepVar var, double v, AngleMode mode) {
    switch (var) {
        case SweepVar::m: cfg.m_elements = static_cast<int>(std::lround(v)); break;
        case SweepVar::k: cfg.k_transmitters = static_cast<int>(std::lround(v)); break;
        case SweepVar::b: cfg.adc_bits = static_cast<int>(std::lround(v)); break;
        case SweepVar::snr_therm: cfg.snr_therm_db = v; break;
        case SweepVar::sir: cfg.sir_db = v; break;
        case SweepVar::angle:
            if (mode == AngleMode::blocker_angle)
                cfg.blocker_angle_deg = v;
            else
                cfg.user_angle_spacing_deg = v;
            break;
    }
}
} // namespace

std::string to_string(SweepVar v) {
    switch (v) {
        case SweepVar::m: return "m";
        case SweepVar::k: return "k";
        case SweepVar::b: return "b";
        case SweepVar::snr_therm: return "snr_therm_db";
        case SweepVar::sir: return "sir_db";
        case SweepVar::angle: return "angle_deg";
    }
    return "?";
}

std::string to_string(OutputMetric m) {
    switch (m) {
        case OutputMetric::ber: return "ber";
        case OutputMetric::evm: return "evm";
        case OutputMetric::sndr: return "sndr";
        case OutputMetric::enob: return "enob";
        case OutputMetric::sir_min: return "sir_min";
        case OutputMetric::array_gain: return "array_gain";
    }
    return "?";
}

std::vector<double> SweepAxis::values() const {
    std::vector<double> out;
    if (log2_step) {
        if (start <= 0.0 || stop < start || step <= 1.0)
            throw ConfigError("sweep axis: multiplicative step needs start > 0, stop >= start, step > 1");
        for (double v = start; v <= stop * (1.0 + 1e-9); v *= step) out.push_back(v);
        return out;
    }
    if (step == 0.0) throw ConfigError("sweep axis: step must be nonzero");
    if ((stop - start) * step < 0.0) throw ConfigError("sweep axis: step sign inconsistent with range");
    const double n = std::floor((stop - start) / step + 1e-9);
    for (int i = 0; i <= static_cast<int>(n); ++i) out.push_back(start + i * step);
    return out;
}

std::vector<std::string> validate_spec(const SweepSpec& spec) {
    if (spec.axes.empty() || spec.axes.size() > 3)
        throw ConfigError("sweep needs 1 to 3 swept variables");
    for (const SweepAxis& a : spec.axes) (void)a.values(); // range checks

    bool has_sir_axis = false;
    for (const SweepAxis& a : spec.axes) {
        if (a.var == SweepVar::sir) has_sir_axis = true;
        if (a.var == SweepVar::angle && spec.angle_mode == AngleMode::blocker_angle &&
            !spec.base.enable_blocker)
            throw ConfigError("blocker must be enabled to sweep the interferer angle");
    }
    if (spec.output == OutputMetric::sir_min && !has_sir_axis)
        throw ConfigError("sir_min output requires an SIR axis to consume");

    std::vector<std::string> warnings;
    for (const SweepAxis& a : spec.axes) {
        if (a.var == SweepVar::snr_therm && !spec.base.add_therm_noise)
            warnings.push_back("sweeping SNR_therm with thermal noise disabled has no effect");
        if (a.var == SweepVar::sir && !spec.base.enable_blocker)
            warnings.push_back("sweeping SIR without an enabled blocker has no effect");
    }
    return warnings;
}

std::size_t ResultGrid::flat_index(const std::vector<std::size_t>& idx) const {
    std::size_t flat = 0;
    for (std::size_t d = 0; d < axis_values.size(); ++d) flat = flat * axis_values[d].size() + idx[d];
    return flat;
}

ResultGrid run_sweep(const SweepSpec& spec, int jobs) {
    ResultGrid grid;
    grid.spec = spec;
    grid.warnings = validate_spec(spec);
    grid.master_seed = spec.base.seed;
    grid.tool_version = kToolVersion;
    grid.timestamp = iso_timestamp();

    // Full evaluation grid, including the inner SIR axis in sir_min mode.
    std::vector<std::vector<double>> full_vals;
    full_vals.reserve(spec.axes.size());
    for (const SweepAxis& a : spec.axes) full_vals.push_back(a.values());

    std::size_t total = 1;
    for (const auto& v : full_vals) total *= v.size();

    std::vector<CellResult> full_cells(total);
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t ci = next.fetch_add(1);
            if (ci >= total) return;
            SystemConfig cfg = spec.base;
            std::size_t rem = ci;
            for (std::size_t d = full_vals.size(); d-- > 0;) {
                const std::size_t n = full_vals[d].size();
                const std::size_t i = rem % n;
                rem /= n;
                apply_axis(cfg, spec.axes[d].var, full_vals[d][i], spec.angle_mode);
            }
            cfg.seed = derive_seed(spec.base.seed, StreamKind::cell, ci);
            CellResult& cell = full_cells[ci];
            try {
                cell.users = run_single(cfg);
                cell.ok = true;
            } catch (const std::exception& e) {
                cell.ok = false;
                cell.error = e.what();
            }
        }
    };

    const int n_workers = std::max(1, jobs);
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    if (spec.output != OutputMetric::sir_min) {
        grid.grid_axes = spec.axes;
        grid.axis_values = full_vals;
        grid.cells = std::move(full_cells);
        return grid;
    }

    // sir_min: collapse the (last-listed) SIR axis through the ENOB crossing.
    std::size_t sir_dim = spec.axes.size();
    for (std::size_t d = 0; d < spec.axes.size(); ++d)
        if (spec.axes[d].var == SweepVar::sir) sir_dim = d;
    std::vector<double> sir_vals = full_vals[sir_dim];
    if (!std::is_sorted(sir_vals.begin(), sir_vals.end()))
        throw ConfigError("sir_min mode needs an ascending SIR axis");

    std::vector<std::size_t> outer_dims;
    for (std::size_t d = 0; d < spec.axes.size(); ++d)
        if (d != sir_dim) outer_dims.push_back(d);

    for (std::size_t d : outer_dims) {
        grid.grid_axes.push_back(spec.axes[d]);
        grid.axis_values.push_back(full_vals[d]);
    }

    std::size_t outer_total = 1;
    for (std::size_t d : outer_dims) outer_total *= full_vals[d].size();
    grid.cells.resize(outer_total);

    for (std::size_t oc = 0; oc < outer_total; ++oc) {
        // outer index -> per-dimension indices
        std::vector<std::size_t> oidx(outer_dims.size());
        std::size_t rem = oc;
        for (std::size_t d = outer_dims.size(); d-- > 0;) {
            const std::size_t n = full_vals[outer_dims[d]].size();
            oidx[d] = rem % n;
            rem /= n;
        }

        std::vector<double> sir_ok;
        std::vector<std::vector<double>> enob_per_user; // [user][point]
        std::string first_error;
        for (std::size_t si = 0; si < sir_vals.size(); ++si) {
            std::vector<std::size_t> fidx(spec.axes.size());
            for (std::size_t d = 0; d < outer_dims.size(); ++d) fidx[outer_dims[d]] = oidx[d];
            fidx[sir_dim] = si;
            std::size_t flat = 0;
            for (std::size_t d = 0; d < fidx.size(); ++d) flat = flat * full_vals[d].size() + fidx[d];

            const CellResult& inner = full_cells[flat];
            if (!inner.ok) {
                if (first_error.empty()) first_error = inner.error;
                continue;
            }
            if (enob_per_user.empty()) enob_per_user.resize(inner.users.size());
            sir_ok.push_back(sir_vals[si]);
            for (std::size_t u = 0; u < inner.users.size(); ++u)
                enob_per_user[u].push_back(inner.users[u].enob);
        }

        CellResult& cell = grid.cells[oc];
        if (sir_ok.size() < 2) {
            cell.ok = false;
            cell.error = first_error.empty() ? "too few valid SIR points for crossing" : first_error;
            continue;
        }
        cell.ok = true;
        for (const std::vector<double>& enobs : enob_per_user) {
            const SirMinResult r = extract_sir_min(sir_ok, enobs);
            cell.sir_min_db.push_back(r.crossed() ? r.sir_min_db
                                                  : std::numeric_limits<double>::quiet_NaN());
        }
    }
    return grid;
}

} // namespace dbfsim
