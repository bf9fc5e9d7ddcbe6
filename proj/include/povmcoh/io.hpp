// Copyright 2026 The povmcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POVMCOH_IO_HPP
#define POVMCOH_IO_HPP

// JSON and CSV formats. Complex numbers are [re, im] pairs.
//
//   POVM:    {"dim": d, "outcomes": n, "components": [[[[re,im], ...], ...], ...]}
//   channel: {"dim": d, "operators": [...same matrix layout...]}
//   counts:  {"dim": d, "outcomes": n, "shots": s, "runs": r,
//             "table": {"k,l": [[count per outcome] per run]}}

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "povmcoh/channels.hpp"
#include "povmcoh/linalg.hpp"
#include "povmcoh/povm.hpp"
#include "povmcoh/tomography.hpp"

namespace povmcoh {

using Json = nlohmann::json;

/// Malformed file or document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Json to_json(const Matrix &m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const Json &j, std::size_t d, const std::string &where) {
    if (!j.is_array() || j.size() != d) {
        throw FormatError(where + ": expected " + std::to_string(d) + " rows");
    }
    Matrix m(d);
    for (std::size_t r = 0; r < d; ++r) {
        const Json &row = j[r];
        if (!row.is_array() || row.size() != d) {
            throw FormatError(where + ": row " + std::to_string(r) + " must have " + std::to_string(d) + " entries");
        }
        for (std::size_t c = 0; c < d; ++c) {
            const Json &z = row[c];
            if (z.is_number()) {
                m(r, c) = z.get<double>();
            } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
                m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
            } else {
                throw FormatError(where + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") must be [re, im]");
            }
        }
    }
    return m;
}

inline std::size_t size_field(const Json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        throw FormatError(std::string("missing or invalid \"") + key + "\"");
    }
    return j[key].get<std::size_t>();
}

inline Json to_json(const Povm &p) {
    Json comps = Json::array();
    for (const auto &c : p.components()) {
        comps.push_back(to_json(c.matrix()));
    }
    return {{"dim", p.dim()}, {"outcomes", p.outcomes()}, {"components", comps}};
}

/// Shape-checked only; validity is the caller's concern (see `validate`).
inline Povm povm_from_json(const Json &j) {
    const std::size_t d = size_field(j, "dim");
    if (!j.contains("components") || !j["components"].is_array()) {
        throw FormatError("missing \"components\" array");
    }
    const Json &cs = j["components"];
    if (j.contains("outcomes") && size_field(j, "outcomes") != cs.size()) {
        throw FormatError("\"outcomes\" does not match the number of components");
    }
    std::vector<HermitianMatrix> comps;
    for (std::size_t a = 0; a < cs.size(); ++a) {
        comps.emplace_back(matrix_from_json(cs[a], d, "component " + std::to_string(a)));
    }
    return Povm(std::move(comps));
}

inline Json to_json(const KrausChannel &c) {
    Json ops = Json::array();
    for (const auto &k : c.operators()) {
        ops.push_back(to_json(k));
    }
    return {{"dim", c.dim()}, {"operators", ops}};
}

inline KrausChannel channel_from_json(const Json &j) {
    const std::size_t d = size_field(j, "dim");
    if (!j.contains("operators") || !j["operators"].is_array()) {
        throw FormatError("missing \"operators\" array");
    }
    std::vector<GeneralMatrix> ops;
    for (std::size_t mu = 0; mu < j["operators"].size(); ++mu) {
        ops.push_back(matrix_from_json(j["operators"][mu], d, "operator " + std::to_string(mu)));
    }
    return KrausChannel(std::move(ops));
}

inline Json to_json(const TomographyRecord &rec) {
    if (!rec.has_counts()) {
        throw FormatError("counts JSON requires a record with counts");
    }
    Json table = Json::object();
    for (std::size_t k = 0; k < rec.counts.size(); ++k) {
        table[to_string(ProbeLabel{k / rec.dim, k % rec.dim})] = rec.counts[k];
    }
    return {{"dim", rec.dim},
            {"outcomes", rec.outcomes},
            {"shots", rec.shots},
            {"runs", rec.runs()},
            {"table", table}};
}

inline TomographyRecord record_from_json(const Json &j) {
    TomographyRecord rec;
    rec.dim = size_field(j, "dim");
    rec.outcomes = size_field(j, "outcomes");
    rec.shots = size_field(j, "shots");
    const std::size_t runs = size_field(j, "runs");
    if (!j.contains("table") || !j["table"].is_object()) {
        throw FormatError("missing \"table\" object");
    }
    const Json &t = j["table"];
    for (std::size_t k = 0; k < rec.dim; ++k) {
        for (std::size_t l = 0; l < rec.dim; ++l) {
            const std::string key = to_string(ProbeLabel{k, l});
            if (!t.contains(key)) {
                throw ValidationError("counts table is missing probe row (" + key + ")", k * rec.dim + l);
            }
            std::vector<std::vector<std::uint64_t>> per_run;
            try {
                per_run = t[key].get<std::vector<std::vector<std::uint64_t>>>();
            } catch (const Json::exception &) {
                throw FormatError("probe row (" + key + ") must be a list of count lists");
            }
            if (per_run.size() != runs) {
                throw ValidationError("probe row (" + key + ") has " + std::to_string(per_run.size()) +
                                          " runs, expected " + std::to_string(runs),
                                      k * rec.dim + l);
            }
            for (const auto &c : per_run) {
                std::uint64_t total = 0;
                for (auto x : c) {
                    total += x;
                }
                if (total != rec.shots) {
                    throw ValidationError("probe row (" + key + ") counts sum to " + std::to_string(total) +
                                              ", expected " + std::to_string(rec.shots),
                                          k * rec.dim + l);
                }
            }
            rec.counts.push_back(std::move(per_run));
        }
    }
    if (t.size() != rec.dim * rec.dim) {
        throw FormatError("counts table has unexpected probe labels");
    }
    rec.check_shape();
    return rec;
}

inline Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw FormatError("'" + path + "': " + e.what());
    }
}

inline void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

// --- plot data ---

/// Column-oriented numeric table; NaN cells are written empty (CSV) or null
/// (JSON).
struct PlotTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

enum class PlotFormat { csv, json };

/// Shortest round-tripping decimal representation, '.' separator.
inline std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    for (int prec = 1; prec <= 17; ++prec) {
        char tmp[32];
        std::snprintf(tmp, sizeof tmp, "%.*g", prec, x);
        if (std::strtod(tmp, nullptr) == x) {
            return tmp;
        }
    }
    return buf;
}

inline std::string render_plot_data(const PlotTable &t, PlotFormat f) {
    if (t.rows.empty()) {
        throw std::invalid_argument("plot table '" + t.name + "' is empty");
    }
    if (f == PlotFormat::csv) {
        std::string s;
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            s += (c ? "," : "") + t.columns[c];
        }
        s += '\n';
        for (const auto &row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) {
                    s += ',';
                }
                if (!std::isnan(row[c])) {
                    s += format_number(row[c]);
                }
            }
            s += '\n';
        }
        return s;
    }
    Json rows = Json::array();
    for (const auto &row : t.rows) {
        Json r = Json::array();
        for (double x : row) {
            r.push_back(std::isnan(x) ? Json(nullptr) : Json(x));
        }
        rows.push_back(std::move(r));
    }
    const Json doc = {{"schema", "povm-coherence/v1"}, {"table", t.name}, {"columns", t.columns}, {"rows", rows}};
    return doc.dump(2) + "\n";
}

inline void emit_plot_data(const PlotTable &t, PlotFormat f, const std::string &path) {
    write_text_file(path, render_plot_data(t, f));
}

} // namespace povmcoh

#endif // POVMCOH_IO_HPP
