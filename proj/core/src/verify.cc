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

#include "steerlab/verify.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "steerlab/classify.h"
#include "steerlab/concurrence.h"
#include "steerlab/ellipsoid.h"
#include "steerlab/error.h"
#include "steerlab/families.h"
#include "steerlab/kkt.h"
#include "steerlab/monogamy.h"
#include "steerlab/sampling.h"

namespace steerlab {

namespace {

constexpr std::size_t kMaxMessages = 8;

class Tally {
   public:
    explicit Tally(Suite suite) {
        result_.suite = suite;
    }

    void check(bool ok, const std::string &what) {
        ++result_.checks;
        if (!ok) {
            ++result_.failures;
            if (result_.messages.size() < kMaxMessages) {
                result_.messages.push_back(what);
            }
        }
    }

    void band() {
        ++result_.band;
    }

    SuiteResult take() {
        return std::move(result_);
    }

   private:
    SuiteResult result_;
};

std::string tag(const char *label, std::uint64_t index) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s #%llu", label, static_cast<unsigned long long>(index));
    return buf;
}

// Physical candidates and candidates pushed outside the PSD cone alternate.
// Every eighth draw is rank deficient and so lies on the boundary.
HermitianOperator oracle_candidate(std::uint64_t seed, std::uint64_t i) {
    Rng rng(shard_seed(seed, i));
    int rank = i % 8 == 0 ? 1 + static_cast<int>((i / 8) % 3) : 4;
    HermitianOperator rho = random_mixed_state(rng, rank);
    if (i % 2 == 1) {
        double delta = std::pow(10.0, -1.0 - static_cast<double>((i / 2) % 6));
        rho = push_outside_psd(rho, delta);
    }
    return rho;
}

SuiteResult run_oracle_equivalence(const VerifyConfig &cfg) {
    Tally tally(Suite::OracleEquivalence);
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(cfg.samples); ++i) {
        HermitianOperator rho = oracle_candidate(cfg.seed, i);
        PhysicalityReport report = classify_state(rho, cfg.tol_psd);
        if (!report.geometric_available) {
            continue;
        }
        bool agree = report.geometric_physical == report.oracle_physical;
        if (report.boundary) {
            tally.band();
            continue;
        }
        tally.check(agree, tag("geometric and eigenvalue verdicts differ", i));
    }
    return tally.take();
}

SuiteResult run_chirality(const VerifyConfig &cfg) {
    Tally tally(Suite::Chirality);
    const std::uint64_t root = shard_seed(cfg.seed, 0x63686972);
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(cfg.samples); ++i) {
        Rng rng(shard_seed(root, i));
        HermitianOperator rho = random_mixed_state(rng, 1 + static_cast<int>(i % 4));
        PhysicalityReport report = classify_state(rho, cfg.tol_psd);
        if (!report.geometric_available || !report.entangled.has_value()) {
            continue;
        }
        if (*report.entangled) {
            if (report.chirality == 0) {
                tally.band();
                continue;
            }
            tally.check(report.chirality == -1, tag("entangled state with right-handed ellipsoid", i));
            continue;
        }
        if (report.chirality == 0) {
            continue;
        }
        HermitianOperator flipped = partial_transpose(rho, Party::B);
        PhysicalityReport flipped_report = classify_state(flipped, cfg.tol_psd);
        bool ok = flipped_report.oracle_physical && flipped_report.entangled.has_value() &&
                  !*flipped_report.entangled && flipped_report.chirality == -report.chirality;
        tally.check(ok, tag("chirality flip left the separable set", i));
    }
    return tally.take();
}

std::array<double, 4> random_simplex(Rng &rng) {
    std::exponential_distribution<double> exp(1.0);
    std::array<double, 4> p{};
    double total = 0.0;
    for (double &x : p) {
        x = exp(rng);
        total += x;
    }
    for (double &x : p) {
        x /= total;
    }
    return p;
}

SuiteResult run_bounds(const VerifyConfig &cfg) {
    Tally tally(Suite::Bounds);
    const std::uint64_t root = shard_seed(cfg.seed, 0x626f756e);
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(cfg.samples); ++i) {
        Rng rng(shard_seed(root, i));

        BellDiagonalSpec spec = simplex_to_bell_diagonal(random_simplex(rng));
        double c_bd = concurrence(spec.state());
        double closed = bell_diagonal_concurrence(spec);
        double tetra = std::sqrt(std::abs(spec.t.prod()));
        tally.check(std::abs(c_bd - closed) <= 1e-10, tag("Bell-diagonal closed form mismatch", i));
        tally.check(c_bd <= tetra + 1e-9, tag("Bell-diagonal concurrence above sqrt|t1 t2 t3|", i));

        HermitianOperator rho = random_mixed_state(rng, 1 + static_cast<int>(i % 4));
        VolumeBound vb = concurrence_volume_bound(rho);
        tally.check(vb.slack >= -1e-9, tag("concurrence above the volume bound", i));
        tally.check(vb.obesity_slack >= -1e-9, tag("concurrence above obesity", i));
    }

    // Saturation on the maximal-volume family for a range of Bob marginals.
    const double bs[] = {0.0, 0.3, 0.6, 0.9};
    for (int k = 0; k <= 20; ++k) {
        double c = 0.05 * k;
        if (c >= 1.0) {
            continue;
        }
        for (double bz : bs) {
            VolumeBound vb = concurrence_volume_bound(max_volume_general(c, Vec3(0.0, 0.0, bz)));
            tally.check(std::abs(vb.slack) <= 1e-9, tag("maximal-volume state not saturated", static_cast<std::uint64_t>(k)));
        }
        tally.check(std::abs(concurrence(max_volume_canonical(c)) - std::sqrt(1.0 - c)) <= 1e-10,
                    tag("maximal-volume concurrence differs from sqrt(1 - c)", static_cast<std::uint64_t>(k)));
    }
    return tally.take();
}

SuiteResult run_monogamy(const VerifyConfig &cfg) {
    Tally tally(Suite::Monogamy);
    const std::uint64_t root = shard_seed(cfg.seed, 0x6d6f6e6f);
    const double tol = 1e-8;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(cfg.samples); ++i) {
        Rng rng(shard_seed(root, i));
        ThreeQubitPure psi = random_pure_three_qubit(rng);
        MonogamyReport r = monogamy_report(psi);
        double identity_tol = r.near_singular ? 1e-5 : tol;
        tally.check(r.inequalities_hold(tol), tag("monogamy inequality violated", i));
        tally.check(r.volume_centre_identity_holds(identity_tol), tag("volume-centre identity fails", i));
        tally.check(r.ckw_slack() >= r.implied_ckw_slack() - tol, tag("CKW slack below implied slack", i));

        MonogamyReport s = monogamy_report(swap_outer_parties(psi));
        double scale = std::max(1.0, r.volume_a_by_b);
        tally.check(std::abs(s.volume_a_by_b - r.volume_c_by_b) <= tol * scale &&
                        std::abs(s.volume_c_by_b - r.volume_a_by_b) <= tol * scale,
                    tag("relabelling A and C does not swap volumes", i));
    }
    for (int k = 1; k < 20; ++k) {
        double c = 0.05 * k;
        MonogamyReport r = monogamy_report(w_family(c));
        tally.check(std::abs(r.scenario_a_lhs - std::sqrt(kFourPiOverThree)) <= 1e-9,
                    tag("w family does not saturate", static_cast<std::uint64_t>(k)));
    }
    return tally.take();
}

SuiteResult run_kkt(const VerifyConfig &) {
    Tally tally(Suite::Kkt);
    for (ExtremalKind kind : kAllExtremalKinds) {
        for (int k = 0; k < 20; ++k) {
            double c = 0.05 * k;
            std::uint64_t id = static_cast<std::uint64_t>(k);
            KktSolution sol = solve_extremal(problem_for_kind(kind, c));
            Vec3 expected = extremal_profile(kind, c);
            double diff = (sol.semiaxes - expected).cwiseAbs().maxCoeff();
            tally.check(diff <= 1e-6, tag("optimizer misses the closed-form profile", id));
            tally.check(std::abs(sol.invariants.g1) <= 1e-8, tag("optimum off the g1 = 0 boundary", id));
            if (!sol.regular) {
                tally.band();
                continue;
            }
            tally.check(sol.lambda1 >= -1e-8 && sol.lambda2 >= -1e-8, tag("negative multiplier", id));
            tally.check(std::abs(sol.lambda1 * sol.invariants.g1) <= 1e-8 &&
                            std::abs(sol.lambda2 * sol.invariants.g2) <= 1e-8,
                        tag("complementary slackness fails", id));
        }
    }
    for (int k = 0; k <= 20; ++k) {
        double c = 0.05 * k;
        if (c >= 1.0) {
            continue;
        }
        Vec3 s = extremal_profile(ExtremalKind::EllipsePhys, c);
        EllipseKktResiduals r = ellipse_kkt_residuals(s(0), s(1), c);
        std::uint64_t id = static_cast<std::uint64_t>(k);
        tally.check(std::abs(r.lambda2) <= 1e-8 && std::abs(r.g1) <= 1e-8,
                    tag("ellipse optimum fails the stationarity system", id));
    }
    for (double c : {0.0, 0.3, 0.7}) {
        for (int chi : {-1, 1}) {
            tally.check(verify_spheroid_symmetry(c, chi), "unreduced optimum is not a spheroid");
        }
    }
    return tally.take();
}

}  // namespace

std::string_view suite_name(Suite suite) {
    switch (suite) {
        case Suite::OracleEquivalence:
            return "oracle-equivalence";
        case Suite::Chirality:
            return "chirality";
        case Suite::Bounds:
            return "bounds";
        case Suite::Monogamy:
            return "monogamy";
        case Suite::Kkt:
            return "kkt";
    }
    return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : kAllSuites) {
        if (suite_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

SuiteResult run_suite(Suite suite, const VerifyConfig &config) {
    switch (suite) {
        case Suite::OracleEquivalence:
            return run_oracle_equivalence(config);
        case Suite::Chirality:
            return run_chirality(config);
        case Suite::Bounds:
            return run_bounds(config);
        case Suite::Monogamy:
            return run_monogamy(config);
        case Suite::Kkt:
            return run_kkt(config);
    }
    throw Error(ErrorCode::UnknownSuite, "unhandled suite");
}

std::vector<SuiteResult> run_suites(std::string_view name, const VerifyConfig &config) {
    if (config.samples < 0) {
        throw Error(ErrorCode::BadRange, "samples must be non-negative");
    }
    std::vector<SuiteResult> out;
    if (name == "all") {
        for (Suite s : kAllSuites) {
            out.push_back(run_suite(s, config));
        }
        return out;
    }
    auto suite = parse_suite(name);
    if (!suite) {
        throw Error(ErrorCode::UnknownSuite, "unknown suite '" + std::string(name) + "'");
    }
    out.push_back(run_suite(*suite, config));
    return out;
}

std::string format_summary(const std::vector<SuiteResult> &results) {
    std::ostringstream os;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    for (const SuiteResult &r : results) {
        char line[160];
        std::snprintf(line, sizeof line, "%-20s %s checks=%llu failures=%llu band=%llu\n",
                      std::string(suite_name(r.suite)).c_str(), r.passed() ? "PASS" : "FAIL",
                      static_cast<unsigned long long>(r.checks), static_cast<unsigned long long>(r.failures),
                      static_cast<unsigned long long>(r.band));
        os << line;
        for (const std::string &m : r.messages) {
            os << "  " << m << '\n';
        }
        checks += r.checks;
        failures += r.failures;
    }
    char total[120];
    std::snprintf(total, sizeof total, "total                %s checks=%llu failures=%llu\n",
                  failures == 0 ? "PASS" : "FAIL", static_cast<unsigned long long>(checks),
                  static_cast<unsigned long long>(failures));
    os << total;
    return os.str();
}

}  // namespace steerlab
