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

#include "dbfsim/results_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "dbfsim/errors.hpp"

namespace dbfsim {

using nlohmann::json;

namespace {

SweepVar sweep_var_from_string(const std::string& s) {
    if (s == "m") return SweepVar::m;
    if (s == "k") return SweepVar::k;
    if (s == "b") return SweepVar::b;
    if (s == "snr_therm_db" || s == "snr_therm") return SweepVar::snr_therm;
    if (s == "sir_db" || s == "sir") return SweepVar::sir;
    if (s == "angle_deg" || s == "angle") return SweepVar::angle;
    throw ConfigError("unknown sweep variable '" + s + "'");
}

OutputMetric output_from_string(const std::string& s) {
    if (s == "ber") return OutputMetric::ber;
    if (s == "evm") return OutputMetric::evm;
    if (s == "sndr") return OutputMetric::sndr;
    if (s == "enob") return OutputMetric::enob;
    if (s == "sir_min") return OutputMetric::sir_min;
    if (s == "array_gain") return OutputMetric::array_gain;
    throw ConfigError("unknown output metric '" + s + "'");
}

AngleMode angle_mode_from_string(const std::string& s) {
    if (s == "user_spacing") return AngleMode::user_spacing;
    if (s == "blocker_angle") return AngleMode::blocker_angle;
    throw ConfigError("unknown angle mode '" + s + "'");
}

json axis_to_json(const SweepAxis& a) {
    return json{{"var", to_string(a.var)},
                {"start", a.start},
                {"stop", a.stop},
                {"step", a.step},
                {"log2_step", a.log2_step}};
}

SweepAxis axis_from_json(const json& j) {
    SweepAxis a;
    a.var = sweep_var_from_string(j.at("var").get<std::string>());
    a.start = j.at("start").get<double>();
    a.stop = j.at("stop").get<double>();
    a.step = j.at("step").get<double>();
    a.log2_step = j.value("log2_step", false);
    return a;
}

json config_to_json(const SystemConfig& c) {
    return json{{"m", c.m_elements},
                {"k", c.k_transmitters},
                {"b", c.adc_bits},
                {"snr_therm_db", c.snr_therm_db},
                {"sir_db", c.sir_db},
                {"user_angle_spacing_deg", c.user_angle_spacing_deg},
                {"blocker_angle_deg", c.blocker_angle_deg},
                {"enable_blocker", c.enable_blocker},
                {"zf_on", c.zf_on},
                {"add_therm_noise", c.add_therm_noise},
                {"n_symbols", c.n_symbols},
                {"seed", c.seed}};
}

SystemConfig config_from_json(const json& j, SystemConfig base) {
    base.m_elements = j.value("m", base.m_elements);
    base.k_transmitters = j.value("k", base.k_transmitters);
    base.adc_bits = j.value("b", base.adc_bits);
    base.snr_therm_db = j.value("snr_therm_db", base.snr_therm_db);
    base.sir_db = j.value("sir_db", base.sir_db);
    base.user_angle_spacing_deg = j.value("user_angle_spacing_deg", base.user_angle_spacing_deg);
    base.blocker_angle_deg = j.value("blocker_angle_deg", base.blocker_angle_deg);
    base.enable_blocker = j.value("enable_blocker", base.enable_blocker);
    base.zf_on = j.value("zf_on", base.zf_on);
    base.add_therm_noise = j.value("add_therm_noise", base.add_therm_noise);
    base.n_symbols = j.value("n_symbols", base.n_symbols);
    base.seed = j.value("seed", base.seed);
    return base;
}

/// JSON has no NaN literal; missing crossings serialize as null.
json finite_or_null(double v) {
    if (std::isnan(v) || std::isinf(v)) return nullptr;
    return v;
}

double double_or_nan(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

} // namespace

void write_csv(const ResultGrid& grid, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");

    const bool sir_min_mode = grid.spec.output == OutputMetric::sir_min;

    f << "# dbfsim " << grid.tool_version << " seed=" << grid.master_seed << " sweep="
      << grid.spec.name << "\n";
    for (const SweepAxis& a : grid.grid_axes) f << to_string(a.var) << ",";
    f << "user_index,";
    if (sir_min_mode)
        f << "sir_min_db,";
    else
        f << "ber,evm_rms_pct,sndr_db,enob,array_gain_db,";
    f << "error\n";

    const std::size_t dims = grid.axis_values.size();
    std::vector<std::size_t> idx(dims, 0);
    for (std::size_t ci = 0; ci < grid.cells.size(); ++ci) {
        const CellResult& cell = grid.cells[ci];
        std::string prefix;
        {
            std::ostringstream os;
            for (std::size_t d = 0; d < dims; ++d) os << format_double(grid.axis_values[d][idx[d]]) << ",";
            prefix = os.str();
        }
        if (!cell.ok) {
            f << prefix << ",";
            if (sir_min_mode)
                f << ",";
            else
                f << ",,,,,";
            f << "\"" << cell.error << "\"\n";
        } else if (sir_min_mode) {
            for (std::size_t u = 0; u < cell.sir_min_db.size(); ++u) {
                f << prefix << u << ",";
                if (std::isnan(cell.sir_min_db[u]))
                    f << ",";
                else
                    f << format_double(cell.sir_min_db[u]) << ",";
                f << "\n";
            }
        } else {
            for (const MetricsRecord& r : cell.users) {
                f << prefix << r.user_index << "," << format_double(r.ber) << ","
                  << format_double(r.evm_rms_pct) << "," << format_double(r.sndr_db) << ","
                  << format_double(r.enob) << "," << format_double(r.array_gain_db) << ",\n";
            }
        }
        // advance lexicographic index, last dimension fastest
        for (std::size_t d = dims; d-- > 0;) {
            if (++idx[d] < grid.axis_values[d].size()) break;
            idx[d] = 0;
        }
    }
    if (!f) throw IoError("write failed on '" + path + "'");
}

void write_json(const ResultGrid& grid, const std::string& path) {
    json j;
    j["schema_version"] = kResultSchemaVersion;
    j["metadata"] = json{{"tool_version", grid.tool_version},
                         {"timestamp", grid.timestamp},
                         {"master_seed", grid.master_seed},
                         {"sweep_name", grid.spec.name},
                         {"warnings", grid.warnings}};
    json spec;
    spec["base"] = config_to_json(grid.spec.base);
    spec["axes"] = json::array();
    for (const SweepAxis& a : grid.spec.axes) spec["axes"].push_back(axis_to_json(a));
    spec["angle_mode"] =
        grid.spec.angle_mode == AngleMode::blocker_angle ? "blocker_angle" : "user_spacing";
    spec["output"] = to_string(grid.spec.output);
    spec["log_x"] = grid.spec.log_x;
    spec["log_y"] = grid.spec.log_y;
    spec["log_z"] = grid.spec.log_z;
    spec["name"] = grid.spec.name;
    j["spec"] = spec;

    j["grid_axes"] = json::array();
    for (const SweepAxis& a : grid.grid_axes) j["grid_axes"].push_back(axis_to_json(a));
    j["axis_values"] = grid.axis_values;

    json cells = json::array();
    for (const CellResult& c : grid.cells) {
        json jc;
        jc["ok"] = c.ok;
        if (!c.ok) {
            jc["error"] = c.error;
        } else {
            json users = json::array();
            for (const MetricsRecord& r : c.users) {
                users.push_back(json{{"user_index", r.user_index},
                                     {"ber", r.ber},
                                     {"evm_rms_pct", r.evm_rms_pct},
                                     {"sndr_db", finite_or_null(r.sndr_db)},
                                     {"enob", finite_or_null(r.enob)},
                                     {"array_gain_db", finite_or_null(r.array_gain_db)}});
            }
            jc["users"] = users;
            if (!c.sir_min_db.empty()) {
                json sm = json::array();
                for (double v : c.sir_min_db) sm.push_back(finite_or_null(v));
                jc["sir_min_db"] = sm;
            }
        }
        cells.push_back(jc);
    }
    j["cells"] = cells;

    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << j.dump(2) << "\n";
    if (!f) throw IoError("write failed on '" + path + "'");
}

ResultGrid read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open '" + path + "'");
    json j = json::parse(f, nullptr, true, true);

    if (j.value("schema_version", 0) != kResultSchemaVersion)
        throw IoError("unsupported result schema in '" + path + "'");

    ResultGrid grid;
    const json& meta = j.at("metadata");
    grid.tool_version = meta.value("tool_version", "");
    grid.timestamp = meta.value("timestamp", "");
    grid.master_seed = meta.value("master_seed", std::uint64_t{0});
    grid.warnings = meta.value("warnings", std::vector<std::string>{});

    const json& spec = j.at("spec");
    grid.spec.base = config_from_json(spec.at("base"), SystemConfig{});
    for (const json& ja : spec.at("axes")) grid.spec.axes.push_back(axis_from_json(ja));
    grid.spec.angle_mode = angle_mode_from_string(spec.value("angle_mode", "user_spacing"));
    grid.spec.output = output_from_string(spec.at("output").get<std::string>());
    grid.spec.log_x = spec.value("log_x", false);
    grid.spec.log_y = spec.value("log_y", false);
    grid.spec.log_z = spec.value("log_z", false);
    grid.spec.name = spec.value("name", "custom");

    for (const json& ja : j.at("grid_axes")) grid.grid_axes.push_back(axis_from_json(ja));
    grid.axis_values = j.at("axis_values").get<std::vector<std::vector<double>>>();

    for (const json& jc : j.at("cells")) {
        CellResult c;
        c.ok = jc.at("ok").get<bool>();
        if (!c.ok) {
            c.error = jc.value("error", "");
        } else {
            for (const json& ju : jc.at("users")) {
                MetricsRecord r;
                r.user_index = ju.at("user_index").get<int>();
                r.ber = ju.at("ber").get<double>();
                r.evm_rms_pct = ju.at("evm_rms_pct").get<double>();
                r.sndr_db = double_or_nan(ju.at("sndr_db"));
                r.enob = double_or_nan(ju.at("enob"));
                r.array_gain_db = double_or_nan(ju.at("array_gain_db"));
                c.users.push_back(r);
            }
            if (jc.contains("sir_min_db"))
                for (const json& jv : jc.at("sir_min_db")) c.sir_min_db.push_back(double_or_nan(jv));
        }
        grid.cells.push_back(std::move(c));
    }
    return grid;
}

void apply_config_file(SweepSpec& spec, const std::string& path, std::vector<std::string>& warnings) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open config file '" + path + "'");
    json j;
    try {
        j = json::parse(f, nullptr, true, true); // comments allowed
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config file parse error: ") + e.what());
    }

    if (j.contains("config")) spec.base = config_from_json(j.at("config"), spec.base);

    if (j.contains("sweep")) {
        const json& js = j.at("sweep");
        if (js.contains("axes")) {
            spec.axes.clear();
            for (const json& ja : js.at("axes")) spec.axes.push_back(axis_from_json(ja));
        }
        if (js.contains("output")) spec.output = output_from_string(js.at("output").get<std::string>());
        if (js.contains("angle_mode"))
            spec.angle_mode = angle_mode_from_string(js.at("angle_mode").get<std::string>());

        // GUI-style boolean pair; when both are set the interferer angle wins.
        const bool sweep_user = js.value("sweep_user_angle", false);
        const bool sweep_blocker = js.value("sweep_blocker_angle", false);
        if (sweep_user && sweep_blocker) {
            spec.angle_mode = AngleMode::blocker_angle;
            warnings.push_back("both angle-sweep flags set; sweeping the interferer angle only");
        } else if (sweep_blocker) {
            spec.angle_mode = AngleMode::blocker_angle;
        } else if (sweep_user) {
            spec.angle_mode = AngleMode::user_spacing;
        }

        spec.log_x = js.value("log_x", spec.log_x);
        spec.log_y = js.value("log_y", spec.log_y);
        spec.log_z = js.value("log_z", spec.log_z);
        if (js.contains("name")) spec.name = js.at("name").get<std::string>();
    }
}

} // namespace dbfsim
