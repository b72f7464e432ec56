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

#include "steerlab/ellipsoid.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "steerlab/error.h"

namespace steerlab {

namespace {

int sign_with_tolerance(double det) {
    if (std::abs(det) < kTolDet) {
        return 0;
    }
    return det > 0 ? 1 : -1;
}

// Canonical-frame determinant det(T~) = gamma_b^4 det(Theta): Bob's filter acts
// on Theta as a unit-determinant Lorentz boost times a positive scale.
double canonical_det(const PauliForm &pf) {
    double g = pf.gamma_b();
    return g * g * g * g * pf.theta().determinant();
}

void require_steerable(const Vec3 &steerer) {
    if ((1.0 - steerer.norm()) / 2.0 <= kMarginalFloor) {
        throw Error(ErrorCode::SteererPure, "steering party's marginal is pure");
    }
}

}  // namespace

Vec3 Ellipsoid::semiaxes() const {
    Eigen::SelfAdjointEigenSolver<Mat3> es(Q, Eigen::EigenvaluesOnly);
    Vec3 s = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    std::sort(s.data(), s.data() + 3, std::greater<>());
    return s;
}

double Ellipsoid::volume() const {
    return kFourPiOverThree * std::sqrt(std::max(0.0, Q.determinant()));
}

double Ellipsoid::max_radius() const {
    Eigen::SelfAdjointEigenSolver<Mat3> es(Q);
    auto support = [&](const Vec3 &n) { return n.dot(centre) + std::sqrt(std::max(0.0, n.dot(Q * n))); };

    std::vector<Vec3> starts;
    if (centre.norm() > 0) {
        starts.push_back(centre.normalized());
    }
    for (int k = 0; k < 3; ++k) {
        starts.push_back(es.eigenvectors().col(k));
        starts.push_back(-es.eigenvectors().col(k));
    }
    // Fibonacci sphere for coverage of non-axis directions.
    constexpr int kGrid = 64;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < kGrid; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / kGrid;
        double r = std::sqrt(1.0 - z * z);
        starts.emplace_back(r * std::cos(golden * i), r * std::sin(golden * i), z);
    }

    // The support function is convex, so n <- grad / |grad| never decreases it.
    double best = 0.0;
    for (Vec3 n : starts) {
        double h = support(n);
        for (int it = 0; it < 200; ++it) {
            double qn = std::sqrt(std::max(0.0, n.dot(Q * n)));
            Vec3 grad = centre;
            if (qn > 1e-300) {
                grad += Q * n / qn;
            }
            if (grad.norm() == 0.0) {
                break;
            }
            Vec3 next = grad.normalized();
            double hn = support(next);
            if (hn <= h + 1e-16) {
                break;
            }
            n = next;
            h = hn;
        }
        best = std::max(best, h);
    }
    return best;
}

SignedSemiaxes signed_semiaxes(const Mat3 &T) {
    Eigen::JacobiSVD<Mat3> svd(T, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Vec3 sigma = svd.singularValues();
    double sign = svd.matrixU().determinant() * svd.matrixV().determinant() < 0 ? -1.0 : 1.0;
    return SignedSemiaxes{Vec3(sigma(0), sigma(1), sign * sigma(2))};
}

Ellipsoid steering_ellipsoid(const PauliForm &pf, Party steered) {
    if (steered == Party::C) {
        throw Error(ErrorCode::BadPartition, "two-qubit ellipsoids steer A or B");
    }
    const PauliForm f = steered == Party::A ? pf : pf.swapped();
    require_steerable(f.b);

    const double g2 = 1.0 / (1.0 - f.b.squaredNorm());
    Ellipsoid e;
    e.party = steered;
    e.centre = g2 * (f.a - f.T * f.b);
    const Mat3 left = f.T - f.a * f.b.transpose();
    const Mat3 boost = Mat3::Identity() + g2 * f.b * f.b.transpose();
    Mat3 q = g2 * left * boost * left.transpose();
    e.Q = 0.5 * (q + q.transpose());
    e.chirality = sign_with_tolerance(canonical_det(f));
    return e;
}

HermitianOperator canonicalize(const HermitianOperator &rho) {
    HermitianOperator rho_b = partial_trace(rho, {Party::B});
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_b.matrix());
    if (es.eigenvalues()(0) <= kMarginalFloor) {
        throw Error(ErrorCode::SingularMarginal, "rho_B is not invertible");
    }
    Eigen::VectorXd inv_root = (2.0 * es.eigenvalues()).cwiseSqrt().cwiseInverse();
    CMatrix filter_b = es.eigenvectors() * inv_root.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    CMatrix filter = CMatrix::Zero(4, 4);
    filter.block(0, 0, 2, 2) = filter_b;
    filter.block(2, 2, 2, 2) = filter_b;
    CMatrix out = filter * rho.matrix() * filter;
    out /= out.trace().real();
    return HermitianOperator(0.5 * (out + out.adjoint()));
}

AlignedState align(const HermitianOperator &rho_canonical) {
    PauliForm pf = pauli_decompose(rho_canonical);
    if (pf.b.norm() > kTolHerm) {
        throw Error(ErrorCode::NotCanonical, "Bob's Bloch vector is not zero");
    }
    Eigen::JacobiSVD<Mat3> svd(pf.T, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 u = svd.matrixU();
    Mat3 v = svd.matrixV();
    Vec3 t = svd.singularValues();
    if (u.determinant() < 0) {
        u.col(2) *= -1.0;
        t(2) *= -1.0;
    }
    if (v.determinant() < 0) {
        v.col(2) *= -1.0;
        t(2) *= -1.0;
    }
    PauliForm aligned;
    aligned.a = u.transpose() * pf.a;
    aligned.T = t.asDiagonal();
    return AlignedState{pauli_compose(aligned), SignedSemiaxes{t}, u.transpose(), v.transpose()};
}

int chirality(const Mat3 &T) {
    return sign_with_tolerance(T.determinant());
}

int chirality(const SignedSemiaxes &t) {
    return sign_with_tolerance(t.t.prod());
}

double volume(const PauliForm &pf, Party steered) {
    const Vec3 &steerer = steered == Party::A ? pf.b : pf.a;
    require_steerable(steerer);
    double g2 = 1.0 / (1.0 - steerer.squaredNorm());
    return kFourPiOverThree * g2 * g2 * std::abs(pf.theta().determinant());
}

double obesity(const PauliForm &pf) {
    return std::pow(std::abs(pf.theta().determinant()), 0.25);
}

}  // namespace steerlab
