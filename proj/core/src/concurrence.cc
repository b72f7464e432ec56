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

#include "steerlab/concurrence.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "steerlab/ellipsoid.h"
#include "steerlab/error.h"

namespace steerlab {

namespace {

constexpr double kRankCutoff = 64.0 * std::numeric_limits<double>::epsilon();

constexpr double kSaturationTol = 1e-9;

const CMatrix &spin_flip() {
    static const CMatrix yy = [] {
        CMatrix m = CMatrix::Zero(4, 4);
        const Eigen::Matrix2cd &y = pauli(2);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                m.block(2 * i, 2 * j, 2, 2) = y(i, j) * y;
            }
        }
        return m;
    }();
    return yy;
}

}  // namespace

double concurrence(const HermitianOperator &rho) {
    if (rho.dim() != 4) {
        throw Error(ErrorCode::BadPartition, "concurrence is defined for two qubits");
    }
    if (!is_physical_oracle(rho)) {
        throw Error(ErrorCode::UnphysicalInput, "concurrence needs a state");
    }
    // Singular values of sqrt(rho) sqrt(rho~) are the l_i directly, and avoid
    // the non-Hermitian eigenproblem of rho rho~.
    // Eigenvalues at rounding level are zeroed: the l_i grow like the square
    // root of such noise, which would otherwise shift C by ~1e-9 on
    // rank-deficient states.
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
    Eigen::VectorXd w = es.eigenvalues();
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        w(i) = w(i) > kRankCutoff ? std::sqrt(w(i)) : 0.0;
    }
    CMatrix root = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
    CMatrix flipped_root = spin_flip() * root.conjugate() * spin_flip();
    Eigen::JacobiSVD<CMatrix> svd(root * flipped_root);
    Eigen::VectorXd l = svd.singularValues();
    double c = l(0) - l(1) - l(2) - l(3);
    return std::clamp(c, 0.0, 1.0);
}

HermitianOperator BellDiagonalSpec::state() const {
    PauliForm pf;
    pf.T = t.asDiagonal();
    return pauli_compose(pf);
}

std::array<double, 4> BellDiagonalSpec::bell_weights() const {
    return {
        (1.0 - t(0) - t(1) - t(2)) / 4.0,
        (1.0 - t(0) + t(1) + t(2)) / 4.0,
        (1.0 + t(0) - t(1) + t(2)) / 4.0,
        (1.0 + t(0) + t(1) - t(2)) / 4.0,
    };
}

bool BellDiagonalSpec::is_physical(double tol) const {
    auto w = bell_weights();
    return *std::min_element(w.begin(), w.end()) >= -tol;
}

double bell_diagonal_concurrence(const BellDiagonalSpec &spec) {
    if (!spec.is_physical()) {
        throw Error(ErrorCode::UnphysicalInput, "Bell-diagonal weights are not a distribution");
    }
    // Local unitaries permute the t_i and flip pairs of signs; the invariant
    // content is the sorted magnitudes plus the sign of the product.
    Vec3 mag = spec.t.cwiseAbs();
    std::sort(mag.data(), mag.data() + 3, std::greater<>());
    double sign = spec.t.prod() < 0 ? -1.0 : 1.0;
    double t1 = mag(0);
    double t2 = mag(1);
    double t3 = sign * mag(2);
    return std::max(0.0, 0.5 * (t1 + t2 - t3 - 1.0));
}

BellDiagonalSpec simplex_to_bell_diagonal(const std::array<double, 4> &p) {
    double total = 0.0;
    for (double w : p) {
        if (!(w >= -kTolHerm) || w > 1.0 + kTolHerm) {
            throw Error(ErrorCode::BadWeights, "weights must lie in [0, 1]");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kTolHerm) {
        throw Error(ErrorCode::BadWeights, "weights must sum to 1");
    }
    Vec3 s(p[0] + p[1], p[0] + p[2], p[0] + p[3]);
    BellDiagonalSpec spec;
    spec.t = Vec3(s(0), s(1), -s(2));
    spec.weights = p;
    return spec;
}

VolumeBound concurrence_volume_bound(const HermitianOperator &rho) {
    PauliForm pf = pauli_decompose(rho);
    Ellipsoid e = steering_ellipsoid(pf, Party::A);

    VolumeBound out;
    out.concurrence = concurrence(rho);
    const double v = e.volume();
    out.bound = std::sqrt(1.0 - pf.b.squaredNorm()) * std::pow(v / kFourPiOverThree, 0.25);
    out.slack = out.bound - out.concurrence;
    out.obesity = obesity(pf);
    out.obesity_slack = out.obesity - out.concurrence;
    out.saturated = std::abs(out.slack) <= kSaturationTol;
    return out;
}

double max_concurrence_for_centre(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw Error(ErrorCode::BadRange, "c must lie in [0, 1]");
    }
    return std::sqrt(1.0 - c);
}

}  // namespace steerlab
