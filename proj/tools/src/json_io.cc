// Copyright 2026 The Steerlab Authors
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

#include "steerlab_cli/json_io.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "steerlab/error.h"

namespace steerlab::cli {

namespace {

[[noreturn]] void fail(const std::string &msg) {
    throw Error(ErrorCode::ParseError, msg);
}

const json &field(const json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        fail(std::string("missing field '") + key + "'");
    }
    return *it;
}

double number(const json &v, const char *what) {
    if (!v.is_number()) {
        fail(std::string(what) + " must be a number");
    }
    return v.get<double>();
}

Complex complex_entry(const json &v) {
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (!v.is_array() || v.size() != 2) {
        fail("complex entries are [re, im] pairs");
    }
    return {number(v[0], "real part"), number(v[1], "imaginary part")};
}

Vec3 vec3(const json &v, const char *what) {
    if (!v.is_array() || v.size() != 3) {
        fail(std::string(what) + " must have 3 entries");
    }
    return {number(v[0], what), number(v[1], what), number(v[2], what)};
}

Mat3 mat3(const json &v, const char *what) {
    if (!v.is_array() || v.size() != 3) {
        fail(std::string(what) + " must be a 3x3 array");
    }
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        m.row(i) = vec3(v[static_cast<size_t>(i)], what).transpose();
    }
    return m;
}

json complex_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

json vec_json(const Vec3 &v) {
    return json::array({v(0), v(1), v(2)});
}

json mat_json(const Mat3 &m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        rows.push_back(vec_json(m.row(i).transpose()));
    }
    return rows;
}

void write(std::ostringstream &os, const json &v, int indent, int depth) {
    const std::string pad = indent > 0 ? std::string(static_cast<size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close_pad = indent > 0 ? std::string(static_cast<size_t>(indent * depth), ' ') : "";
    const char *nl = indent > 0 ? "\n" : "";
    const char *sep = indent > 0 ? ": " : ":";
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) {
                os << "{}";
                return;
            }
            os << '{' << nl;
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) {
                    os << ',' << nl;
                }
                first = false;
                os << pad << json(it.key()).dump() << sep;
                write(os, it.value(), indent, depth + 1);
            }
            os << nl << close_pad << '}';
            return;
        }
        case json::value_t::array: {
            if (v.empty()) {
                os << "[]";
                return;
            }
            // Numeric rows stay on one line.
            bool flat = std::all_of(v.begin(), v.end(), [](const json &e) { return !e.is_structured(); });
            if (flat) {
                os << '[';
                for (size_t i = 0; i < v.size(); ++i) {
                    if (i > 0) {
                        os << (indent > 0 ? ", " : ",");
                    }
                    write(os, v[i], indent, depth + 1);
                }
                os << ']';
                return;
            }
            os << '[' << nl;
            for (size_t i = 0; i < v.size(); ++i) {
                if (i > 0) {
                    os << ',' << nl;
                }
                os << pad;
                write(os, v[i], indent, depth + 1);
            }
            os << nl << close_pad << ']';
            return;
        }
        case json::value_t::number_float:
            os << format_number(v.get<double>());
            return;
        default:
            os << v.dump();
            return;
    }
}

}  // namespace

std::string format_number(double x) {
    if (!std::isfinite(x)) {
        return "null";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string dump(const json &doc, int indent) {
    std::ostringstream os;
    write(os, doc, indent, 0);
    return os.str();
}

ParsedState parse_state(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    return parse_state(doc);
}

ParsedState parse_state(const json &doc) {
    if (!doc.is_object()) {
        fail("state document must be an object");
    }
    const json &kind = field(doc, "kind");
    if (!kind.is_string()) {
        fail("'kind' must be a string");
    }
    const std::string k = kind.get<std::string>();

    if (k == "dense4") {
        const json &rows = field(doc, "matrix");
        if (!rows.is_array() || rows.size() != 4) {
            fail("dense4 matrix must have 4 rows");
        }
        CMatrix m(4, 4);
        for (int i = 0; i < 4; ++i) {
            const json &row = rows[static_cast<size_t>(i)];
            if (!row.is_array() || row.size() != 4) {
                fail("dense4 rows must have 4 entries");
            }
            for (int j = 0; j < 4; ++j) {
                m(i, j) = complex_entry(row[static_cast<size_t>(j)]);
            }
        }
        return HermitianOperator(m);
    }
    if (k == "pauli") {
        PauliForm pf;
        pf.a = vec3(field(doc, "a"), "a");
        pf.b = vec3(field(doc, "b"), "b");
        pf.T = mat3(field(doc, "T"), "T");
        return pauli_compose(pf);
    }
    if (k == "pure8") {
        const json &amps = field(doc, "amplitudes");
        if (!amps.is_array() || amps.size() != 8) {
            fail("pure8 needs 8 amplitudes");
        }
        ThreeQubitPure::Amplitudes v;
        for (int i = 0; i < 8; ++i) {
            v(i) = complex_entry(amps[static_cast<size_t>(i)]);
        }
        return ThreeQubitPure(v);
    }
    fail("unknown state kind '" + k + "'");
}

json state_to_json(const HermitianOperator &rho) {
    if (rho.dim() != 4) {
        throw Error(ErrorCode::BadPartition, "only two-qubit operators have a dense4 form");
    }
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) {
            row.push_back(complex_json(rho(i, j)));
        }
        rows.push_back(row);
    }
    return {{"kind", "dense4"}, {"matrix", rows}};
}

json pauli_to_json(const PauliForm &pf) {
    return {{"kind", "pauli"}, {"a", vec_json(pf.a)}, {"b", vec_json(pf.b)}, {"T", mat_json(pf.T)}};
}

json pure_to_json(const ThreeQubitPure &psi) {
    json amps = json::array();
    for (int i = 0; i < 8; ++i) {
        amps.push_back(complex_json(psi.amplitudes()(i)));
    }
    return {{"kind", "pure8"}, {"amplitudes", amps}};
}

json ellipsoid_to_json(const Ellipsoid &e) {
    return {{"centre", vec_json(e.centre)},
            {"Q", mat_json(e.Q)},
            {"chirality", e.chirality},
            {"semiaxes", vec_json(e.semiaxes())},
            {"volume", e.volume()}};
}

json report_to_json(const PhysicalityReport &report) {
    json out;
    out["u"] = report.invariants.u;
    out["q"] = report.invariants.q;
    out["g1"] = report.invariants.g1;
    out["g2"] = report.invariants.g2;
    out["physical"] = report.geometric_available ? report.geometric_physical : report.oracle_physical;
    out["entangled"] = report.entangled ? json(*report.entangled) : json(nullptr);
    out["chirality"] = report.chirality;
    out["boundary"] = report.boundary;
    return out;
}

json concurrence_to_json(const VolumeBound &bound) {
    return {{"concurrence", bound.concurrence},
            {"volume_bound", bound.bound},
            {"obesity", bound.obesity},
            {"saturated", bound.saturated}};
}

json monogamy_to_json(const MonogamyReport &r) {
    json out;
    out["volumes"] = {{"A|B", r.volume_a_by_b}, {"C|B", r.volume_c_by_b}, {"B|A", r.volume_b_by_a}, {"B|C", r.volume_b_by_c}};
    out["centres"] = {{"A|B", vec_json(r.centre_a_by_b)}, {"C|B", vec_json(r.centre_c_by_b)}};
    out["gamma"] = {{"A", r.gamma_a}, {"B", r.gamma_b}, {"C", r.gamma_c}};
    out["concurrence"] = {{"AB", r.concurrence_ab}, {"BC", r.concurrence_bc}};
    out["det_rho_b"] = r.det_rho_b;
    out["tangle"] = r.tangle;
    out["scenario_a"] = {{"lhs", r.scenario_a_lhs}, {"rhs", r.scenario_a_rhs}, {"saturated", r.scenario_a_saturated}};
    out["scenario_b"] = {{"lhs", r.scenario_b_lhs}, {"rhs", r.scenario_b_rhs}, {"saturated", r.scenario_b_saturated}};
    out["volume_centre"] = {{"lhs", r.volume_centre_lhs}, {"rhs", r.volume_centre_rhs}};
    out["centre_sum"] = r.centre_sum;
    out["ckw"] = {{"lhs", r.ckw_lhs}, {"rhs", r.ckw_rhs}};
    out["obesity"] = {{"lhs", r.obesity_lhs}, {"rhs", r.obesity_rhs}};
    out["bob_can_steer"] = r.bob_can_steer;
    out["near_singular"] = r.near_singular;
    return out;
}

}  // namespace steerlab::cli
