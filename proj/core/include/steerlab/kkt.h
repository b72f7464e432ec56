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

#ifndef STEERLAB_KKT_H
#define STEERLAB_KKT_H

#include "steerlab/classify.h"
#include "steerlab/families.h"

namespace steerlab {

/// How the semiaxes are tied together before optimizing.
///   Axial:      solid: s1 = s2 (non-radial), s3 radial; planar: (s1 radial, s2) free.
///   Isotropic:  all semiaxes equal (sphere or circle).
///   Unreduced:  every semiaxis is its own variable.
enum class Reduction { Axial, Isotropic, Unreduced };

/// Maximize ellipsoid volume (dimension 3, centre (0,0,c)) or ellipse area
/// (dimension 2, centre (c,0,0), chi = 0) subject to the positivity
/// constraints g1, g2, g3 >= 0 and 0 <= s_i <= 1.
struct KktProblem {
    double c = 0.0;
    int chi = -1;
    int dimension = 3;
    Reduction reduction = Reduction::Axial;
    /// Last barrier weight; the schedule runs from 1e-2 down by factors of 10.
    double mu_end = 1e-8;
};

KktProblem problem_for_kind(ExtremalKind kind, double c);

struct KktSolution {
    /// Semiaxes in x, y, z order; zero third entry for planar problems.
    Vec3 semiaxes = Vec3::Zero();
    /// Volume, or area for planar problems.
    double objective = 0.0;
    GeometricInvariants invariants;
    /// Multipliers of g1 and g2 for L = objective + l1 g1 + l2 g2 (0 when inactive).
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    int starts = 0;
    bool polished = false;
    /// False when no nonnegative multipliers satisfy stationarity, e.g. when
    /// the active constraint gradients vanish or miss the objective gradient.
    bool regular = true;
};

/// Multi-start interior-penalty maximization followed by an active-set
/// Newton polish. Throws BadRange for c outside [0, 1] or a chirality that
/// does not fit the dimension; Infeasible if no start point is feasible.
KktSolution solve_extremal(const KktProblem &problem);

/// Stationarity multipliers of the planar problem, with centre (c, 0, 0) and
/// Q = diag(s1^2, s2^2, 0), for the Lagrangian 8 s1 s2 + l1 g1 + 2 l2 g2.
struct EllipseKktResiduals {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    /// Set when s1 = s2 and c = 0 make both multiplier formulas 0/0. The
    /// stationarity equations then leave l1 free; it is fixed by complementary
    /// slackness on g2 (l2 = 0), which is also the limit along the optimal
    /// curve c -> 0.
    bool limit_taken = false;
};

/// Throws DegenerateAxes when s1 or s2 is not positive.
EllipseKktResiduals ellipse_kkt_residuals(double s1, double s2, double c);

struct SymmetryCheck {
    Vec3 semiaxes = Vec3::Zero();
    bool holds = false;
};

/// Unreduced three-variable solve; holds when the two non-radial axes agree
/// to 1e-5 (so the radial axis is the distinct one, or all three agree).
SymmetryCheck spheroid_symmetry_check(double c, int chi);
bool verify_spheroid_symmetry(double c, int chi);

}  // namespace steerlab

#endif
