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

#include "steerlab/kkt.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "steerlab/error.h"

namespace steerlab {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kGradStep = 1e-6;
constexpr double kHessStep = 1e-4;
constexpr double kMuStart = 1e-2;
constexpr double kGradTol = 1e-10;
constexpr double kMaxRegularMultiplier = 1e5;
constexpr int kMinStarts = 16;
constexpr int kMaxStarts = 64;
constexpr int kNumConstraintsBase = 3;  // g1, g2, g3

// The symmetry-reduced problem: variables x map onto semiaxes, the objective
// is sum_i mult_i log x_i, constraints are g1, g2, g3 and 1 - x_i.
class Model {
   public:
    explicit Model(const KktProblem &p) : p_(p) {
        if (p.dimension == 3) {
            switch (p.reduction) {
                case Reduction::Axial:
                    mult_ = {2.0, 1.0};
                    break;
                case Reduction::Isotropic:
                    mult_ = {3.0};
                    break;
                case Reduction::Unreduced:
                    mult_ = {1.0, 1.0, 1.0};
                    break;
            }
        } else {
            mult_ = p.reduction == Reduction::Isotropic ? std::vector<double>{2.0} : std::vector<double>{1.0, 1.0};
        }
    }

    int n() const {
        return static_cast<int>(mult_.size());
    }
    int m() const {
        return kNumConstraintsBase + n();
    }

    Vec3 semiaxes(const VectorXd &x) const {
        if (p_.dimension == 3) {
            switch (p_.reduction) {
                case Reduction::Axial:
                    return {x(0), x(0), x(1)};
                case Reduction::Isotropic:
                    return {x(0), x(0), x(0)};
                case Reduction::Unreduced:
                    return {x(0), x(1), x(2)};
            }
        }
        if (p_.reduction == Reduction::Isotropic) {
            return {x(0), x(0), 0.0};
        }
        return {x(0), x(1), 0.0};
    }

    GeometricInvariants invariants(const VectorXd &x) const {
        auto inv = extended_invariants(x);
        return {static_cast<double>(inv.u), static_cast<double>(inv.q), static_cast<double>(inv.g1),
                static_cast<double>(inv.g2), static_cast<double>(inv.g3)};
    }

    // The conditions are evaluated in extended precision: finite differences
    // of cancelling polynomials are otherwise dominated by rounding.
    BasicGeometricInvariants<long double> extended_invariants(const VectorXd &x) const {
        Vec3 s = semiaxes(x);
        long double sq[3];
        for (int i = 0; i < 3; ++i) {
            sq[i] = static_cast<long double>(s(i)) * static_cast<long double>(s(i));
        }
        const long double c = p_.c;
        EllipsoidScalars<long double> e;
        e.c2 = c * c;
        e.trace = sq[0] + sq[1] + sq[2];
        e.trace_sq = sq[0] * sq[0] + sq[1] * sq[1] + sq[2] * sq[2];
        e.root_det = static_cast<long double>(s(0)) * s(1) * s(2);
        // Solid problems put the centre on z, planar ones on x.
        e.skew = p_.c == 0.0 ? 0.0L : (p_.dimension == 3 ? sq[2] : sq[0]);
        return physicality_conditions(e, p_.dimension == 3 ? p_.chi : 0);
    }

    VectorXd constraints(const VectorXd &x) const {
        GeometricInvariants inv = invariants(x);  // rounded once, after evaluation
        VectorXd h(m());
        h(0) = inv.g1;
        h(1) = inv.g2;
        h(2) = inv.g3;
        for (int i = 0; i < n(); ++i) {
            h(kNumConstraintsBase + i) = 1.0 - x(i);
        }
        return h;
    }

    // Column k is the gradient of constraint k (central differences).
    MatrixXd constraint_jacobian(const VectorXd &x) const {
        MatrixXd jac(n(), m());
        for (int i = 0; i < n(); ++i) {
            VectorXd xp = x;
            VectorXd xm = x;
            xp(i) += kGradStep;
            xm(i) -= kGradStep;
            jac.row(i) = ((constraints(xp) - constraints(xm)) / (2.0 * kGradStep)).transpose();
        }
        return jac;
    }

    // Hessian of constraint k, by central differences of the gradient.
    std::vector<MatrixXd> constraint_hessians(const VectorXd &x) const {
        std::vector<MatrixXd> hess(static_cast<size_t>(m()), MatrixXd::Zero(n(), n()));
        for (int j = 0; j < n(); ++j) {
            VectorXd xp = x;
            VectorXd xm = x;
            xp(j) += kHessStep;
            xm(j) -= kHessStep;
            MatrixXd d = (constraint_jacobian(xp) - constraint_jacobian(xm)) / (2.0 * kHessStep);
            for (int k = 0; k < m(); ++k) {
                hess[static_cast<size_t>(k)].col(j) = d.col(k);
            }
        }
        for (auto &h : hess) {
            h = 0.5 * (h + h.transpose()).eval();
        }
        return hess;
    }

    double log_objective(const VectorXd &x) const {
        double f = 0.0;
        for (int i = 0; i < n(); ++i) {
            f += mult_[static_cast<size_t>(i)] * std::log(x(i));
        }
        return f;
    }

    VectorXd log_objective_grad(const VectorXd &x) const {
        VectorXd g(n());
        for (int i = 0; i < n(); ++i) {
            g(i) = mult_[static_cast<size_t>(i)] / x(i);
        }
        return g;
    }

    MatrixXd log_objective_hess(const VectorXd &x) const {
        MatrixXd h = MatrixXd::Zero(n(), n());
        for (int i = 0; i < n(); ++i) {
            h(i, i) = -mult_[static_cast<size_t>(i)] / (x(i) * x(i));
        }
        return h;
    }

    double objective(const VectorXd &x) const {
        Vec3 s = semiaxes(x);
        if (p_.dimension == 3) {
            return kFourPiOverThree * s(0) * s(1) * s(2);
        }
        return std::numbers::pi * s(0) * s(1);
    }

    bool strictly_feasible(const VectorXd &x) const {
        return (x.array() > 0.0).all() && (constraints(x).array() > 0.0).all();
    }

    double barrier(const VectorXd &x, double mu) const {
        if (!strictly_feasible(x)) {
            return -std::numeric_limits<double>::infinity();
        }
        return log_objective(x) + mu * constraints(x).array().log().sum();
    }

   private:
    KktProblem p_;
    std::vector<double> mult_;
};

// Damped Newton ascent on the barrier function for fixed mu.
VectorXd maximize_barrier(const Model &model, VectorXd x, double mu) {
    const int n = model.n();
    for (int iter = 0; iter < 200; ++iter) {
        VectorXd h = model.constraints(x);
        MatrixXd jac = model.constraint_jacobian(x);
        VectorXd grad = model.log_objective_grad(x) + mu * jac * h.cwiseInverse();
        if (grad.norm() <= kGradTol) {
            break;
        }
        auto hess_h = model.constraint_hessians(x);
        MatrixXd hess = model.log_objective_hess(x);
        for (int k = 0; k < model.m(); ++k) {
            hess += mu * (hess_h[static_cast<size_t>(k)] / h(k) -
                          jac.col(k) * jac.col(k).transpose() / (h(k) * h(k)));
        }
        // Ascent direction from the regularized negated Hessian.
        MatrixXd neg = -hess;
        double tau = 0.0;
        VectorXd dir;
        for (int attempt = 0; attempt < 60; ++attempt) {
            Eigen::LLT<MatrixXd> llt(neg + tau * MatrixXd::Identity(n, n));
            if (llt.info() == Eigen::Success) {
                dir = llt.solve(grad);
                break;
            }
            tau = tau == 0.0 ? 1e-10 * std::max(1.0, neg.norm()) : tau * 10.0;
        }
        if (dir.size() == 0) {
            dir = grad;
        }

        const double current = model.barrier(x, mu);
        double alpha = 1.0;
        bool moved = false;
        for (int ls = 0; ls < 60; ++ls) {
            VectorXd trial = x + alpha * dir;
            double value = model.barrier(trial, mu);
            if (std::isfinite(value) && value >= current + 1e-4 * alpha * grad.dot(dir)) {
                moved = (trial - x).norm() > 0.0;
                x = trial;
                break;
            }
            alpha *= 0.5;
        }
        if (!moved) {
            break;
        }
    }
    return x;
}

struct Polished {
    VectorXd x;
    bool ok = false;
};

// Newton on the KKT system restricted to an active set, dropping
// constraints whose multiplier comes out negative.
Polished polish(const Model &model, const VectorXd &x0, const VectorXd &lambda0) {
    const int n = model.n();
    std::vector<int> active;
    for (int k = 0; k < model.m(); ++k) {
        if (lambda0(k) >= 1e-4) {
            active.push_back(k);
        }
    }

    while (true) {
        const int na = static_cast<int>(active.size());
        VectorXd x = x0;
        VectorXd lam(na);
        for (int i = 0; i < na; ++i) {
            lam(i) = lambda0(active[static_cast<size_t>(i)]);
        }

        double residual_norm = std::numeric_limits<double>::infinity();
        for (int iter = 0; iter < 100; ++iter) {
            VectorXd h = model.constraints(x);
            MatrixXd jac = model.constraint_jacobian(x);
            VectorXd residual(n + na);
            residual.head(n) = model.log_objective_grad(x);
            for (int i = 0; i < na; ++i) {
                residual.head(n) += lam(i) * jac.col(active[static_cast<size_t>(i)]);
                residual(n + i) = h(active[static_cast<size_t>(i)]);
            }
            residual_norm = residual.lpNorm<Eigen::Infinity>();
            if (residual_norm <= 1e-13) {
                break;
            }
            auto hess_h = model.constraint_hessians(x);
            MatrixXd kkt = MatrixXd::Zero(n + na, n + na);
            kkt.topLeftCorner(n, n) = model.log_objective_hess(x);
            for (int i = 0; i < na; ++i) {
                int k = active[static_cast<size_t>(i)];
                kkt.topLeftCorner(n, n) += lam(i) * hess_h[static_cast<size_t>(k)];
                kkt.block(0, n + i, n, 1) = jac.col(k);
                kkt.block(n + i, 0, 1, n) = jac.col(k).transpose();
            }
            VectorXd step = kkt.completeOrthogonalDecomposition().solve(-residual);
            if (!step.allFinite()) {
                break;
            }
            x += step.head(n);
            lam += step.tail(na);
            if (step.head(n).lpNorm<Eigen::Infinity>() <= 1e-14) {
                break;
            }
        }

        Polished out;
        out.x = x;
        // Finite-difference gradients put a floor near 1e-8 on the residual.
        if (!(residual_norm <= 1e-6) || !x.allFinite() || (x.array() <= 0.0).any()) {
            return out;
        }
        if (na > 0) {
            int worst = 0;
            for (int i = 1; i < na; ++i) {
                if (lam(i) < lam(worst)) {
                    worst = i;
                }
            }
            if (lam(worst) < -1e-6) {
                active.erase(active.begin() + worst);
                continue;
            }
        }
        out.ok = (model.constraints(x).array() >= -1e-12).all();
        return out;
    }
}

struct Multipliers {
    VectorXd lambda;
    double residual = 0.0;
};

// Nonnegative minimum-norm multipliers for the near-active constraints at x,
// on the log-objective scale, with the remaining stationarity residual.
Multipliers stationarity_multipliers(const Model &model, const VectorXd &x) {
    VectorXd h = model.constraints(x);
    MatrixXd jac = model.constraint_jacobian(x);
    VectorXd grad = model.log_objective_grad(x);
    std::vector<int> active;
    for (int k = 0; k < model.m(); ++k) {
        if (h(k) <= 1e-6) {
            active.push_back(k);
        }
    }
    VectorXd lambda = VectorXd::Zero(model.m());
    while (!active.empty()) {
        MatrixXd a(model.n(), static_cast<int>(active.size()));
        for (size_t i = 0; i < active.size(); ++i) {
            a.col(static_cast<int>(i)) = jac.col(active[i]);
        }
        VectorXd sol = a.completeOrthogonalDecomposition().solve(-grad);
        int worst = 0;
        for (int i = 1; i < sol.size(); ++i) {
            if (sol(i) < sol(worst)) {
                worst = i;
            }
        }
        if (sol(worst) < 0.0) {
            active.erase(active.begin() + worst);
            continue;
        }
        for (size_t i = 0; i < active.size(); ++i) {
            lambda(active[i]) = sol(static_cast<int>(i));
        }
        break;
    }
    return {lambda, (grad + jac * lambda).norm()};
}

std::vector<VectorXd> feasible_starts(const Model &model) {
    const int n = model.n();
    const double levels[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    int grid_size = 1;
    for (int i = 0; i < n; ++i) {
        grid_size *= 5;
    }
    std::vector<VectorXd> starts;
    for (int k = 0; k <= 30 && static_cast<int>(starts.size()) < kMinStarts; ++k) {
        double scale = std::ldexp(1.0, -k);
        for (int g = 0; g < grid_size; ++g) {
            VectorXd x(n);
            int code = g;
            for (int i = 0; i < n; ++i) {
                x(i) = scale * levels[code % 5];
                code /= 5;
            }
            if (model.strictly_feasible(x)) {
                starts.push_back(x);
            }
        }
    }
    if (static_cast<int>(starts.size()) > kMaxStarts) {
        std::vector<VectorXd> thinned;
        double stride = static_cast<double>(starts.size()) / kMaxStarts;
        for (int i = 0; i < kMaxStarts; ++i) {
            thinned.push_back(starts[static_cast<size_t>(i * stride)]);
        }
        starts = std::move(thinned);
    }
    return starts;
}

void validate(const KktProblem &p) {
    if (!(p.c >= 0.0 && p.c <= 1.0)) {
        throw Error(ErrorCode::BadRange, "c must lie in [0, 1]");
    }
    if (p.dimension == 3) {
        if (p.chi != 1 && p.chi != -1) {
            throw Error(ErrorCode::BadRange, "solid problems need chi = +1 or -1");
        }
    } else if (p.dimension == 2) {
        if (p.chi != 0) {
            throw Error(ErrorCode::BadRange, "planar problems are degenerate (chi = 0)");
        }
    } else {
        throw Error(ErrorCode::BadRange, "dimension must be 2 or 3");
    }
    if (!(p.mu_end > 0.0 && p.mu_end <= kMuStart)) {
        throw Error(ErrorCode::BadRange, "mu_end must lie in (0, 1e-2]");
    }
}

}  // namespace

KktProblem problem_for_kind(ExtremalKind kind, double c) {
    KktProblem p;
    p.c = c;
    p.chi = extremal_chirality(kind);
    p.dimension = is_planar(kind) ? 2 : 3;
    p.reduction = (kind == ExtremalKind::CirclePhys || kind == ExtremalKind::SphereSep ||
                   kind == ExtremalKind::SpherePhys)
                      ? Reduction::Isotropic
                      : Reduction::Axial;
    return p;
}

KktSolution solve_extremal(const KktProblem &problem) {
    validate(problem);
    Model model(problem);
    std::vector<VectorXd> starts = feasible_starts(model);

    KktSolution best;
    if (starts.empty()) {
        VectorXd zero = VectorXd::Zero(model.n());
        if ((model.constraints(zero).head(kNumConstraintsBase).array() >= 0.0).all()) {
            best.invariants = model.invariants(zero);
            return best;
        }
        throw Error(ErrorCode::Infeasible, "no feasible start point");
    }

    best.objective = -1.0;
    for (const VectorXd &start : starts) {
        VectorXd x = start;
        double mu = kMuStart;
        for (;;) {
            x = maximize_barrier(model, x, mu);
            if (mu <= problem.mu_end * 1.0000001) {
                break;
            }
            mu *= 0.1;
        }
        VectorXd lambda0 = mu * model.constraints(x).cwiseInverse();
        Polished pol = polish(model, x, lambda0);

        VectorXd chosen = x;
        bool polished = false;
        if (pol.ok && model.objective(pol.x) >= model.objective(x) - 1e-9) {
            chosen = pol.x;
            polished = true;
        }
        double obj = model.objective(chosen);
        if (obj > best.objective) {
            best.objective = obj;
            best.semiaxes = model.semiaxes(chosen);
            best.invariants = model.invariants(chosen);
            // d(objective) = objective * d(log objective).
            Multipliers mult = stationarity_multipliers(model, chosen);
            best.lambda1 = obj * mult.lambda(0);
            best.lambda2 = obj * mult.lambda(1);
            // Unbounded multipliers mean the gradients of the active
            // constraints vanish where they meet; no KKT point exists there.
            best.regular = mult.residual <= 1e-6 * model.log_objective_grad(chosen).norm() &&
                           mult.lambda.maxCoeff() <= kMaxRegularMultiplier;
            best.polished = polished;
        }
    }
    best.starts = static_cast<int>(starts.size());
    return best;
}

EllipseKktResiduals ellipse_kkt_residuals(double s1, double s2, double c) {
    if (!(s1 > 0.0) || !(s2 > 0.0)) {
        throw Error(ErrorCode::DegenerateAxes, "semiaxes must be positive");
    }
    const double a = s1 * s1;
    const double b = s2 * s2;
    const double c2 = c * c;
    EllipseKktResiduals r;
    r.g1 = c2 * c2 - 2.0 * c2 * (1.0 + a - b) + 1.0 - 2.0 * a - 2.0 * b - 2.0 * a * b + a * a + b * b;
    r.g2 = 1.0 - a - b - c2;

    double ratio;
    if (c <= 1e-6 && std::abs(b - a) <= 1e-6) {
        ratio = a + b;
        r.limit_taken = true;
    } else {
        ratio = (b - a) / (b - a + c2);
    }
    r.lambda1 = ratio / (s1 * s2);
    r.lambda2 = (a + b - ratio) / (s1 * s2);
    return r;
}

SymmetryCheck spheroid_symmetry_check(double c, int chi) {
    if (!(c >= 0.0 && c < 1.0)) {
        throw Error(ErrorCode::BadRange, "c must lie in [0, 1)");
    }
    KktProblem p;
    p.c = c;
    p.chi = chi;
    p.dimension = 3;
    p.reduction = Reduction::Unreduced;
    KktSolution sol = solve_extremal(p);
    SymmetryCheck out;
    out.semiaxes = sol.semiaxes;
    const double tol = 1e-5;
    out.holds = std::abs(sol.semiaxes(0) - sol.semiaxes(1)) <= tol &&
                (std::abs(sol.semiaxes(2) - sol.semiaxes(0)) > tol || c < tol);
    return out;
}

bool verify_spheroid_symmetry(double c, int chi) {
    return spheroid_symmetry_check(c, chi).holds;
}

}  // namespace steerlab
