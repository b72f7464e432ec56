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

#include "steerlab/monogamy.h"

#include <cmath>
#include <limits>

#include "steerlab/concurrence.h"
#include "steerlab/ellipsoid.h"
#include "steerlab/error.h"

namespace steerlab {

namespace {

constexpr double kSaturationTol = 1e-9;

bool marginal_is_mixed(const Vec3 &bloch) {
    return (1.0 - bloch.norm()) / 2.0 > kMarginalFloor;
}

double inv_gamma2(const Vec3 &bloch) {
    return std::max(0.0, 1.0 - bloch.squaredNorm());
}

double gamma_from(double inv_g2) {
    return inv_g2 > 0.0 ? 1.0 / std::sqrt(inv_g2) : std::numeric_limits<double>::infinity();
}

}  // namespace

double MonogamyReport::implied_ckw_slack() const {
    return inv_gamma2_b * scenario_a_slack() / std::sqrt(4.0 * std::numbers::pi / 3.0);
}

bool MonogamyReport::inequalities_hold(double tol) const {
    return scenario_a_lhs <= scenario_a_rhs + tol && scenario_b_lhs <= scenario_b_rhs + tol &&
           centre_sum <= 1.0 + tol && ckw_lhs <= ckw_rhs + tol && tangle >= -tol &&
           obesity_lhs <= obesity_rhs + tol;
}

bool MonogamyReport::volume_centre_identity_holds(double tol) const {
    if (!bob_can_steer) {
        return true;
    }
    double scale = std::max(1.0, std::abs(volume_centre_rhs));
    return std::abs(volume_centre_lhs - volume_centre_rhs) <= tol * scale;
}

MonogamyReport monogamy_report(const ThreeQubitPure &psi) {
    HermitianOperator rho = psi.density();
    HermitianOperator rho_ab = partial_trace(rho, {Party::A, Party::B});
    HermitianOperator rho_bc = partial_trace(rho, {Party::B, Party::C});
    HermitianOperator rho_b = partial_trace(rho, {Party::B});
    PauliForm ab = pauli_decompose(rho_ab);
    PauliForm bc = pauli_decompose(rho_bc);
    const Vec3 &a = ab.a;
    const Vec3 &b = ab.b;
    const Vec3 &c = bc.b;

    MonogamyReport r;
    r.inv_gamma2_a = inv_gamma2(a);
    r.inv_gamma2_b = inv_gamma2(b);
    r.inv_gamma2_c = inv_gamma2(c);
    r.gamma_a = gamma_from(r.inv_gamma2_a);
    r.gamma_b = gamma_from(r.inv_gamma2_b);
    r.gamma_c = gamma_from(r.inv_gamma2_c);

    r.bob_can_steer = marginal_is_mixed(b);
    if (r.bob_can_steer) {
        Ellipsoid e_ab = steering_ellipsoid(ab, Party::A);
        Ellipsoid e_cb = steering_ellipsoid(bc, Party::B);
        r.volume_a_by_b = e_ab.volume();
        r.volume_c_by_b = e_cb.volume();
        r.centre_a_by_b = e_ab.centre;
        r.centre_c_by_b = e_cb.centre;
    }
    if (marginal_is_mixed(a)) {
        r.volume_b_by_a = steering_ellipsoid(ab, Party::B).volume();
    }
    if (marginal_is_mixed(c)) {
        r.volume_b_by_c = steering_ellipsoid(bc, Party::A).volume();
    }

    Eigen::SelfAdjointEigenSolver<CMatrix> es_b(rho_b.matrix(), Eigen::EigenvaluesOnly);
    double min_marginal = es_b.eigenvalues()(0);
    for (const Vec3 &n : {a, c}) {
        min_marginal = std::min(min_marginal, (1.0 - n.norm()) / 2.0);
    }
    r.near_singular = min_marginal < kNearSingular;

    r.concurrence_ab = concurrence(rho_ab);
    r.concurrence_bc = concurrence(rho_bc);
    r.det_rho_b = rho_b.matrix().determinant().real();
    r.tangle = r.inv_gamma2_b - r.concurrence_ab * r.concurrence_ab - r.concurrence_bc * r.concurrence_bc;

    const double full = std::sqrt(kFourPiOverThree);
    r.scenario_a_lhs = std::sqrt(r.volume_a_by_b) + std::sqrt(r.volume_c_by_b);
    r.scenario_a_rhs = full;
    r.scenario_b_lhs =
        r.inv_gamma2_a * std::sqrt(r.volume_b_by_a) + r.inv_gamma2_c * std::sqrt(r.volume_b_by_c);
    r.scenario_b_rhs = r.inv_gamma2_b * full;
    r.volume_centre_lhs = r.volume_a_by_b;
    r.volume_centre_rhs = kFourPiOverThree * r.centre_c_by_b.squaredNorm();
    r.centre_sum = r.centre_a_by_b.norm() + r.centre_c_by_b.norm();
    r.ckw_lhs = r.concurrence_ab * r.concurrence_ab + r.concurrence_bc * r.concurrence_bc;
    r.ckw_rhs = 4.0 * r.det_rho_b;
    double om_ab = obesity(ab);
    double om_bc = obesity(bc);
    r.obesity_lhs = om_ab * om_ab + om_bc * om_bc;
    r.obesity_rhs = r.inv_gamma2_b;

    r.scenario_a_saturated = std::abs(r.scenario_a_slack()) <= kSaturationTol;
    r.scenario_b_saturated = std::abs(r.scenario_b_rhs - r.scenario_b_lhs) <= kSaturationTol;
    return r;
}

ThreeQubitPure w_family(double c_ab) {
    if (!(c_ab >= 0.0 && c_ab <= 1.0)) {
        throw Error(ErrorCode::BadRange, "c_ab must lie in [0, 1]");
    }
    ThreeQubitPure::Amplitudes amps = ThreeQubitPure::Amplitudes::Zero();
    amps(1) = std::sqrt(c_ab) * M_SQRT1_2;
    amps(2) = M_SQRT1_2;
    amps(4) = std::sqrt(1.0 - c_ab) * M_SQRT1_2;
    return ThreeQubitPure(amps);
}

ThreeQubitPure boost_bob(const ThreeQubitPure &psi, const Vec3 &b) {
    if (!(b.norm() < 1.0)) {
        throw Error(ErrorCode::BadRange, "|b| must be < 1");
    }
    Eigen::Matrix2cd target = 0.5 * (pauli(0) + b(0) * pauli(1) + b(1) * pauli(2) + b(2) * pauli(3));
    CMatrix filter = psd_sqrt(2.0 * CMatrix(target));
    const auto &in = psi.amplitudes();
    ThreeQubitPure::Amplitudes out = ThreeQubitPure::Amplitudes::Zero();
    for (int ia = 0; ia < 2; ++ia) {
        for (int ic = 0; ic < 2; ++ic) {
            for (int x = 0; x < 2; ++x) {
                for (int y = 0; y < 2; ++y) {
                    out(4 * ia + 2 * x + ic) += filter(x, y) * in(4 * ia + 2 * y + ic);
                }
            }
        }
    }
    double n = out.norm();
    if (!(n > 0.0)) {
        throw Error(ErrorCode::BadNorm, "filter annihilated the state");
    }
    return ThreeQubitPure(out / n);
}

ThreeQubitPure swap_outer_parties(const ThreeQubitPure &psi) {
    ThreeQubitPure::Amplitudes out;
    for (int ia = 0; ia < 2; ++ia) {
        for (int ib = 0; ib < 2; ++ib) {
            for (int ic = 0; ic < 2; ++ic) {
                out(4 * ic + 2 * ib + ia) = psi.amplitudes()(4 * ia + 2 * ib + ic);
            }
        }
    }
    return ThreeQubitPure(out);
}

CkwCheck ckw_check(const ThreeQubitPure &psi) {
    HermitianOperator rho = psi.density();
    double c_ab = concurrence(partial_trace(rho, {Party::A, Party::B}));
    double c_bc = concurrence(partial_trace(rho, {Party::B, Party::C}));
    double det_b = partial_trace(rho, {Party::B}).matrix().determinant().real();
    return CkwCheck{c_ab * c_ab + c_bc * c_bc, 4.0 * det_b};
}

}  // namespace steerlab
