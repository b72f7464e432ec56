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

#include "steerlab_cli/commands.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "steerlab/classify.h"
#include "steerlab/concurrence.h"
#include "steerlab/ellipsoid.h"
#include "steerlab/error.h"
#include "steerlab/families.h"
#include "steerlab/kkt.h"
#include "steerlab/monogamy.h"
#include "steerlab_cli/json_io.h"

namespace steerlab::cli {

namespace {

std::string read_input(const std::string &path) {
    if (path.empty()) {
        throw Error(ErrorCode::ParseError, "--in is required");
    }
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path);
    if (!f) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// Writes to --out when given, otherwise to the stream.
void emit(const RunConfig &config, std::ostream &out, const std::string &text) {
    if (config.out.empty() || config.out == "-") {
        out << text;
        return;
    }
    std::ofstream f(config.out);
    if (!f) {
        throw Error(ErrorCode::ParseError, "cannot write '" + config.out + "'");
    }
    f << text;
}

Vec3 parse_vec3(const std::string &text, const char *what) {
    std::stringstream ss(text);
    Vec3 v;
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 3) {
            i = 4;
            break;
        }
        try {
            size_t used = 0;
            v(i) = std::stod(item, &used);
            if (used != item.size()) {
                i = 4;
                break;
            }
        } catch (const std::exception &) {
            i = 4;
            break;
        }
        ++i;
    }
    if (i != 3) {
        throw Error(ErrorCode::ParseError, std::string(what) + " must be three comma-separated numbers");
    }
    return v;
}

double require(const std::optional<double> &v, const char *flag) {
    if (!v) {
        throw Error(ErrorCode::ParseError, std::string(flag) + " is required");
    }
    return *v;
}

ExtremalKind require_kind(const std::string &name) {
    auto kind = parse_extremal_kind(name);
    if (!kind) {
        throw Error(ErrorCode::ParseError, "unknown kind '" + name + "'");
    }
    return *kind;
}

// Cyclic relabelling of the Bloch axes on both qubits; a proper rotation, so
// chirality is preserved.
HermitianOperator rotate_axes(const HermitianOperator &rho, const std::string &axis, bool planar) {
    const int natural = planar ? 0 : 2;
    int target;
    if (axis == "auto") {
        return rho;
    } else if (axis == "x") {
        target = 0;
    } else if (axis == "y") {
        target = 1;
    } else if (axis == "z") {
        target = 2;
    } else {
        throw Error(ErrorCode::ParseError, "--axis must be x, y, z or auto");
    }
    int shift = (target - natural + 3) % 3;
    Mat3 perm = Mat3::Zero();
    for (int i = 0; i < 3; ++i) {
        perm((i + shift) % 3, i) = 1.0;
    }
    PauliForm pf = pauli_decompose(rho);
    pf.a = perm * pf.a;
    pf.b = perm * pf.b;
    pf.T = perm * pf.T * perm.transpose();
    return pauli_compose(pf);
}

json optional_ellipsoid(const PauliForm &pf, Party steered) {
    try {
        return ellipsoid_to_json(steering_ellipsoid(pf, steered));
    } catch (const Error &e) {
        if (e.code() == ErrorCode::SteererPure) {
            return nullptr;
        }
        throw;
    }
}

std::string csv_row(const std::vector<double> &values) {
    std::string line;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            line += ',';
        }
        line += format_number(values[i]);
    }
    return line + '\n';
}

bool is_input_error(ErrorCode code) {
    return code != ErrorCode::Infeasible;
}

}  // namespace

std::vector<double> Grid::points() const {
    std::vector<double> out;
    const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long i = 0; i < n; ++i) {
        double x = start + static_cast<double>(i) * step;
        out.push_back(std::min(x, stop));
    }
    return out;
}

Grid parse_grid(const std::string &spec) {
    std::stringstream ss(spec);
    std::string part;
    std::vector<double> values;
    while (std::getline(ss, part, ':')) {
        try {
            size_t used = 0;
            values.push_back(std::stod(part, &used));
            if (used != part.size()) {
                throw Error(ErrorCode::BadGrid, "bad number in grid '" + spec + "'");
            }
        } catch (const std::logic_error &) {
            throw Error(ErrorCode::BadGrid, "bad number in grid '" + spec + "'");
        }
    }
    if (values.size() != 3) {
        throw Error(ErrorCode::BadGrid, "grid must be start:stop:step");
    }
    Grid g{values[0], values[1], values[2]};
    if (!(g.step > 0.0) || !std::isfinite(g.step)) {
        throw Error(ErrorCode::BadGrid, "grid step must be positive");
    }
    if (!(g.start <= g.stop) || !std::isfinite(g.start) || !std::isfinite(g.stop)) {
        throw Error(ErrorCode::BadGrid, "grid start must not exceed stop");
    }
    return g;
}

std::uint64_t default_seed() {
    if (const char *env = std::getenv("STEERLAB_SEED")) {
        try {
            return std::stoull(env, nullptr, 0);
        } catch (const std::exception &) {
            throw Error(ErrorCode::ParseError, "STEERLAB_SEED is not an integer");
        }
    }
    return kDefaultSeed;
}

int cmd_analyze(const RunConfig &config, std::ostream &out) {
    ParsedState parsed = parse_state(read_input(config.in));
    if (!std::holds_alternative<HermitianOperator>(parsed)) {
        throw Error(ErrorCode::ParseError, "analyze needs a two-qubit state");
    }
    const HermitianOperator &rho = std::get<HermitianOperator>(parsed);
    PauliForm pf = pauli_decompose(rho);
    PhysicalityReport report = classify_state(rho, config.tol_psd);

    json doc;
    doc["state"] = pauli_to_json(pf);
    doc["ellipsoids"] = {{"A", optional_ellipsoid(pf, Party::A)}, {"B", optional_ellipsoid(pf, Party::B)}};
    doc["physicality"] = report_to_json(report);
    doc["obesity"] = obesity(pf);
    doc["concurrence"] = report.oracle_physical ? concurrence_to_json(concurrence_volume_bound(rho)) : json(nullptr);
    emit(config, out, dump(doc) + "\n");
    return kExitOk;
}

int cmd_family(const RunConfig &config, std::ostream &out) {
    const std::string &name = config.family;
    HermitianOperator rho = werner(0.0);
    if (name == "werner") {
        rho = werner(require(config.p, "--p"));
    } else if (name == "inept") {
        rho = inept(require(config.r, "--r"), require(config.eps, "--eps"));
    } else if (name == "max-volume") {
        double c = require(config.c, "--c");
        rho = config.b.empty() ? max_volume_canonical(c) : max_volume_general(c, parse_vec3(config.b, "--b"));
    } else if (name == "amplitude-damping") {
        rho = amplitude_damping_choi(require(config.c, "--c"));
    } else if (name == "extremal") {
        ExtremalKind kind = require_kind(config.kind);
        rho = rotate_axes(extremal_state(kind, require(config.c, "--c")), config.axis, is_planar(kind));
    } else {
        throw Error(ErrorCode::ParseError, "unknown family '" + name + "'");
    }
    emit(config, out, dump(state_to_json(rho)) + "\n");
    return kExitOk;
}

int cmd_boundary(const RunConfig &config, std::ostream &out) {
    Grid grid = parse_grid(config.grid);
    ExtremalKind kind = require_kind(config.kind.empty() ? "oblate-phys" : config.kind);
    if (config.format != "csv" && config.format != "json") {
        throw Error(ErrorCode::ParseError, "--format must be json or csv");
    }
    std::string text;
    json rows = json::array();
    if (config.format == "csv") {
        text = "c,s1,s2,s3,V_sep,V_max\n";
    }
    for (double c : grid.points()) {
        Vec3 s = extremal_profile(kind, c);
        BoundaryVolumes v = boundary_volumes(c);
        if (config.format == "csv") {
            text += csv_row({c, s(0), s(1), s(2), v.sep, v.max});
        } else {
            rows.push_back({{"c", c}, {"semiaxes", {s(0), s(1), s(2)}}, {"V_sep", v.sep}, {"V_max", v.max}});
        }
    }
    if (config.format == "json") {
        text = dump({{"kind", std::string(extremal_kind_name(kind))}, {"rows", rows}}) + "\n";
    }
    emit(config, out, text);
    return kExitOk;
}

int cmd_verify(const RunConfig &config, std::ostream &out) {
    VerifyConfig vc;
    vc.seed = config.seed;
    vc.samples = config.samples;
    vc.tol_psd = config.tol_psd;
    std::vector<SuiteResult> results = run_suites(config.suite, vc);
    emit(config, out, format_summary(results));
    for (const SuiteResult &r : results) {
        if (!r.passed()) {
            return kExitViolation;
        }
    }
    return kExitOk;
}

int cmd_monogamy(const RunConfig &config, std::ostream &out) {
    std::optional<ThreeQubitPure> psi;
    if (config.w_centre) {
        psi = w_family(*config.w_centre);
    } else {
        ParsedState parsed = parse_state(read_input(config.in));
        if (!std::holds_alternative<ThreeQubitPure>(parsed)) {
            throw Error(ErrorCode::ParseError, "monogamy needs a pure8 state");
        }
        psi = std::get<ThreeQubitPure>(parsed);
    }
    if (!config.boost.empty()) {
        psi = boost_bob(*psi, parse_vec3(config.boost, "--boost"));
    }
    MonogamyReport report = monogamy_report(*psi);
    json doc = monogamy_to_json(report);
    doc["state"] = pure_to_json(*psi);
    emit(config, out, dump(doc) + "\n");
    return report.inequalities_hold(1e-8) ? kExitOk : kExitViolation;
}

int cmd_kkt(const RunConfig &config, std::ostream &out) {
    double c = require(config.c, "--c");
    KktProblem problem;
    ExtremalKind kind;
    if (!config.kind.empty()) {
        kind = require_kind(config.kind);
        problem = problem_for_kind(kind, c);
    } else {
        problem.c = c;
        problem.dimension = config.dim;
        problem.chi = config.dim == 2 ? 0 : config.chi;
        if (config.dim == 2) {
            kind = ExtremalKind::EllipsePhys;
        } else if (config.chi == 1) {
            kind = ExtremalKind::OblateSep;
        } else {
            kind = ExtremalKind::OblatePhys;
        }
    }
    KktSolution sol = solve_extremal(problem);
    Vec3 closed = extremal_profile(kind, c);
    json doc;
    doc["kind"] = std::string(extremal_kind_name(kind));
    doc["semiaxes"] = {sol.semiaxes(0), sol.semiaxes(1), sol.semiaxes(2)};
    doc["V"] = sol.objective;
    doc["g1"] = sol.invariants.g1;
    doc["g2"] = sol.invariants.g2;
    doc["closed_form"] = {closed(0), closed(1), closed(2)};
    doc["max_abs_diff"] = (sol.semiaxes - closed).cwiseAbs().maxCoeff();
    doc["lambda1"] = sol.lambda1;
    doc["lambda2"] = sol.lambda2;
    doc["regular"] = sol.regular;
    emit(config, out, dump(doc) + "\n");
    return kExitOk;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig config;
    CLI::App app{"Two-qubit steering ellipsoid toolkit"};
    app.require_subcommand(1);

    auto *analyze = app.add_subcommand("analyze", "Classify a two-qubit state from its steering ellipsoid");
    analyze->add_option("--in", config.in, "State JSON file, or - for stdin")->required();
    analyze->add_option("--out", config.out, "Output file");
    analyze->add_option("--tol-psd", config.tol_psd, "Eigenvalue slack for the PSD oracle");

    auto *family = app.add_subcommand("family", "Emit a named family state as JSON");
    family->add_option("name", config.family, "werner, inept, max-volume, amplitude-damping or extremal")->required();
    family->add_option("--p", config.p, "Werner weight");
    family->add_option("--r", config.r, "Inept radius");
    family->add_option("--eps", config.eps, "Inept angle parameter");
    family->add_option("--c", config.c, "Centre magnitude");
    family->add_option("--b", config.b, "Bob's Bloch vector bx,by,bz");
    family->add_option("--kind", config.kind, "Extremal kind");
    family->add_option("--axis", config.axis, "Centre axis for extremal states: x, y, z or auto");
    family->add_option("--out", config.out, "Output file");

    auto *boundary = app.add_subcommand("boundary", "Tabulate an extremal profile over a grid of centres");
    boundary->add_option("--kind", config.kind, "Extremal kind");
    boundary->add_option("--grid", config.grid, "start:stop:step");
    boundary->add_option("--format", config.format, "csv or json");
    boundary->add_option("--out", config.out, "Output file");

    config.seed = kDefaultSeed;
    auto *verify = app.add_subcommand("verify", "Run property suites");
    verify->add_option("--suite", config.suite, "oracle-equivalence, chirality, bounds, monogamy, kkt or all");
    verify->add_option("--samples", config.samples, "Samples per suite");
    verify->add_option("--seed", config.seed, "Root seed");
    verify->add_option("--tol-psd", config.tol_psd, "Eigenvalue slack for the PSD oracle");
    verify->add_option("--out", config.out, "Output file");

    auto *monogamy = app.add_subcommand("monogamy", "Three-qubit steering monogamy report");
    monogamy->add_option("--in", config.in, "pure8 JSON file, or - for stdin");
    monogamy->add_option("--w-centre", config.w_centre, "Use the W-class family with this centre");
    monogamy->add_option("--boost", config.boost, "Filter Bob's qubit towards bx,by,bz");
    monogamy->add_option("--out", config.out, "Output file");

    auto *kkt = app.add_subcommand("kkt", "Numerically maximize the ellipsoid volume at fixed centre");
    kkt->add_option("--c", config.c, "Centre magnitude")->required();
    kkt->add_option("--chi", config.chi, "Chirality for solid problems: -1 or 1");
    kkt->add_option("--dim", config.dim, "2 for ellipses, 3 for ellipsoids");
    kkt->add_option("--kind", config.kind, "Solve the problem for this extremal kind instead");
    kkt->add_option("--out", config.out, "Output file");

    try {
        config.seed = default_seed();
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(config, out);
        }
        if (family->parsed()) {
            return cmd_family(config, out);
        }
        if (boundary->parsed()) {
            return cmd_boundary(config, out);
        }
        if (verify->parsed()) {
            return cmd_verify(config, out);
        }
        if (monogamy->parsed()) {
            if (!config.w_centre && config.in.empty()) {
                throw Error(ErrorCode::ParseError, "monogamy needs --in or --w-centre");
            }
            return cmd_monogamy(config, out);
        }
        if (kkt->parsed()) {
            return cmd_kkt(config, out);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return is_input_error(e.code()) ? kExitInputError : kExitViolation;
    }
    return kExitInputError;
}

}  // namespace steerlab::cli
