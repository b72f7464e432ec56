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

#ifndef STEERLAB_MONOGAMY_H
#define STEERLAB_MONOGAMY_H

#include "steerlab/qstate.h"

namespace steerlab {

/// Marginals whose smallest eigenvalue is below this are flagged as near singular.
inline constexpr double kNearSingular = 1e-8;

/// Steering data of a pure three-qubit state. "X|Y" reads "X steered by Y".
///
/// Inverse squared Lorentz factors (1 - |n|^2) are stored next to the
/// factors themselves because a pure marginal makes gamma infinite.
struct MonogamyReport {
    double volume_a_by_b = 0.0;
    double volume_c_by_b = 0.0;
    double volume_b_by_a = 0.0;
    double volume_b_by_c = 0.0;
    Vec3 centre_a_by_b = Vec3::Zero();
    Vec3 centre_c_by_b = Vec3::Zero();

    double gamma_a = 1.0;
    double gamma_b = 1.0;
    double gamma_c = 1.0;
    double inv_gamma2_a = 1.0;
    double inv_gamma2_b = 1.0;
    double inv_gamma2_c = 1.0;

    double concurrence_ab = 0.0;
    double concurrence_bc = 0.0;
    double det_rho_b = 0.0;
    double tangle = 0.0;

    /// sqrt V(A|B) + sqrt V(C|B) <= sqrt(4 pi / 3)
    double scenario_a_lhs = 0.0;
    double scenario_a_rhs = 0.0;
    /// gamma_a^-2 sqrt V(B|A) + gamma_c^-2 sqrt V(B|C) <= gamma_b^-2 sqrt(4 pi / 3)
    double scenario_b_lhs = 0.0;
    double scenario_b_rhs = 0.0;
    /// V(A|B) = (4 pi / 3) |c(C|B)|^2, only meaningful when Bob can steer.
    double volume_centre_lhs = 0.0;
    double volume_centre_rhs = 0.0;
    /// |c(A|B)| + |c(C|B)| <= 1
    double centre_sum = 0.0;
    /// C_AB^2 + C_BC^2 <= 4 det rho_B
    double ckw_lhs = 0.0;
    double ckw_rhs = 0.0;
    /// Omega^2(rho_AB) + Omega^2(rho_BC) <= gamma_b^-2
    double obesity_lhs = 0.0;
    double obesity_rhs = 0.0;

    bool bob_can_steer = false;
    bool near_singular = false;
    bool scenario_a_saturated = false;
    bool scenario_b_saturated = false;

    double scenario_a_slack() const {
        return scenario_a_rhs - scenario_a_lhs;
    }
    double ckw_slack() const {
        return ckw_rhs - ckw_lhs;
    }
    /// Lower bound on the CKW slack obtained by feeding the concurrence-volume
    /// bound into the scenario (a) inequality.
    double implied_ckw_slack() const;

    /// All inequalities hold within `tol`.
    bool inequalities_hold(double tol) const;
    /// V(A|B) = (4 pi / 3)|c(C|B)|^2 within a relative `tol` (true when Bob cannot steer).
    bool volume_centre_identity_holds(double tol) const;
};

/// Throws BadNorm through ThreeQubitPure.
MonogamyReport monogamy_report(const ThreeQubitPure &psi);

/// (sqrt(c)|001> + |010> + sqrt(1-c)|100>) / sqrt(2): purification of
/// max_volume_canonical(c) held by A and B. Throws BadRange.
ThreeQubitPure w_family(double c_ab);

/// Applies sqrt(2 rho_B') on Bob with rho_B' = (1 + b.sigma)/2 and renormalizes.
/// Throws BadRange for |b| >= 1.
ThreeQubitPure boost_bob(const ThreeQubitPure &psi, const Vec3 &b);

/// Exchanges qubits A and C.
ThreeQubitPure swap_outer_parties(const ThreeQubitPure &psi);

struct CkwCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};

CkwCheck ckw_check(const ThreeQubitPure &psi);

}  // namespace steerlab

#endif
