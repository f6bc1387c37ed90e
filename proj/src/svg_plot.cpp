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

#include "dbfsim/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "dbfsim/errors.hpp"

namespace dbfsim {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMarginL = 70;
constexpr int kMarginR = 150; // room for the legend
constexpr int kMarginT = 36;
constexpr int kMarginB = 56;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Curve {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

double metric_of(const CellResult& cell, OutputMetric m) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    if (!cell.ok) return nan;
    if (m == OutputMetric::sir_min)
        return cell.sir_min_db.empty() ? nan : cell.sir_min_db.front();
    if (cell.users.empty()) return nan;
    const MetricsRecord& r = cell.users.front(); // user 0, the user of interest
    switch (m) {
        case OutputMetric::ber: return r.ber;
        case OutputMetric::evm: return r.evm_rms_pct;
        case OutputMetric::sndr: return r.sndr_db;
        case OutputMetric::enob: return r.enob;
        case OutputMetric::array_gain: return r.array_gain_db;
        default: return nan;
    }
}

std::string fmt_tick(double v) {
    std::ostringstream os;
    if (std::abs(v) >= 1e4 || (std::abs(v) < 1e-3 && v != 0.0))
        os.precision(1), os << std::scientific << v;
    else
        os.precision(6), os << v;
    return os.str();
}

std::vector<double> linear_ticks(double lo, double hi, int target = 6) {
    if (!(hi > lo)) return {lo};
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (raw <= m * mag) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> t;
    for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) t.push_back(v);
    return t;
}

std::vector<double> log_ticks(double lo, double hi) {
    std::vector<double> t;
    for (int e = static_cast<int>(std::floor(std::log10(lo))); e <= std::ceil(std::log10(hi)); ++e)
        t.push_back(std::pow(10.0, e));
    return t;
}

} // namespace

void write_svg_plot(const ResultGrid& grid, const std::string& path) {
    const std::size_t dims = grid.axis_values.size();
    if (dims == 0 || grid.cells.empty()) throw ConfigError("svg plot: empty grid");
    if (dims > 2) throw ConfigError("svg plot: only 1-D and 2-D grids are supported");

    // x axis = last dimension; earlier dimension becomes the curve family
    const std::size_t xd = dims - 1;
    const std::vector<double>& xs = grid.axis_values[xd];
    const std::size_t n_curves = dims == 2 ? grid.axis_values[0].size() : 1;

    std::vector<Curve> curves;
    for (std::size_t c = 0; c < n_curves; ++c) {
        Curve cur;
        if (dims == 2) {
            std::ostringstream os;
            os << to_string(grid.grid_axes[0].var) << " = " << fmt_tick(grid.axis_values[0][c]);
            cur.label = os.str();
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const std::size_t flat = dims == 2 ? c * xs.size() + i : i;
            const double y = metric_of(grid.cells[flat], grid.spec.output);
            if (std::isnan(y)) continue;
            if (grid.spec.log_y && y <= 0.0) continue;
            cur.x.push_back(xs[i]);
            cur.y.push_back(y);
        }
        if (!cur.x.empty()) curves.push_back(std::move(cur));
    }
    if (curves.empty()) throw ConfigError("svg plot: no plottable points");

    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const Curve& c : curves) {
        for (double v : c.x) xlo = std::min(xlo, v), xhi = std::max(xhi, v);
        for (double v : c.y) ylo = std::min(ylo, v), yhi = std::max(yhi, v);
    }
    if (xhi == xlo) xhi = xlo + 1.0;
    if (yhi == ylo) yhi = ylo + 1.0;
    if (!grid.spec.log_y) {
        const double pad = 0.05 * (yhi - ylo);
        ylo -= pad;
        yhi += pad;
    }

    const bool log_x = grid.spec.log_x && xlo > 0.0;
    const bool log_y = grid.spec.log_y && ylo > 0.0;
    auto xt = [&](double v) {
        const double a = log_x ? std::log10(v) : v;
        const double lo = log_x ? std::log10(xlo) : xlo;
        const double hi = log_x ? std::log10(xhi) : xhi;
        return kMarginL + (a - lo) / (hi - lo) * (kWidth - kMarginL - kMarginR);
    };
    auto yt = [&](double v) {
        const double a = log_y ? std::log10(v) : v;
        const double lo = log_y ? std::log10(ylo) : ylo;
        const double hi = log_y ? std::log10(yhi) : yhi;
        return kHeight - kMarginB - (a - lo) / (hi - lo) * (kHeight - kMarginT - kMarginB);
    };

    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    f << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // frame
    f << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\""
      << kWidth - kMarginL - kMarginR << "\" height=\"" << kHeight - kMarginT - kMarginB
      << "\" fill=\"none\" stroke=\"black\"/>\n";

    const std::vector<double> xticks = log_x ? log_ticks(xlo, xhi) : linear_ticks(xlo, xhi);
    for (double v : xticks) {
        if (v < xlo - 1e-12 || v > xhi + 1e-12) continue;
        const double px = xt(v);
        f << "<line x1=\"" << px << "\" y1=\"" << kHeight - kMarginB << "\" x2=\"" << px << "\" y2=\""
          << kHeight - kMarginB + 5 << "\" stroke=\"black\"/>\n";
        f << "<text x=\"" << px << "\" y=\"" << kHeight - kMarginB + 18
          << "\" text-anchor=\"middle\">" << fmt_tick(v) << "</text>\n";
    }
    const std::vector<double> yticks = log_y ? log_ticks(ylo, yhi) : linear_ticks(ylo, yhi);
    for (double v : yticks) {
        if (v < ylo - 1e-12 || v > yhi + 1e-12) continue;
        const double py = yt(v);
        f << "<line x1=\"" << kMarginL - 5 << "\" y1=\"" << py << "\" x2=\"" << kMarginL << "\" y2=\""
          << py << "\" stroke=\"black\"/>\n";
        f << "<text x=\"" << kMarginL - 8 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">"
          << fmt_tick(v) << "</text>\n";
    }

    // axis labels
    f << "<text x=\"" << (kMarginL + kWidth - kMarginR) / 2 << "\" y=\"" << kHeight - 14
      << "\" text-anchor=\"middle\">" << to_string(grid.grid_axes[xd].var) << "</text>\n";
    f << "<text x=\"16\" y=\"" << (kMarginT + kHeight - kMarginB) / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (kMarginT + kHeight - kMarginB) / 2 << ")\">" << to_string(grid.spec.output) << "</text>\n";
    f << "<text x=\"" << kMarginL << "\" y=\"" << kMarginT - 10 << "\">" << grid.spec.name
      << "</text>\n";

    for (std::size_t c = 0; c < curves.size(); ++c) {
        const char* color = kPalette[c % (sizeof(kPalette) / sizeof(kPalette[0]))];
        f << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < curves[c].x.size(); ++i)
            f << xt(curves[c].x[i]) << "," << yt(curves[c].y[i]) << " ";
        f << "\"/>\n";
        if (!curves[c].label.empty()) {
            const double ly = kMarginT + 16 + 18 * static_cast<double>(c);
            f << "<line x1=\"" << kWidth - kMarginR + 10 << "\" y1=\"" << ly - 4 << "\" x2=\""
              << kWidth - kMarginR + 34 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
              << "\" stroke-width=\"1.5\"/>\n";
            f << "<text x=\"" << kWidth - kMarginR + 40 << "\" y=\"" << ly << "\">" << curves[c].label
              << "</text>\n";
        }
    }
    f << "</svg>\n";
    if (!f) throw IoError("write failed on '" + path + "'");
}

} // namespace dbfsim
