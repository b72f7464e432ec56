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

#ifndef STEERLAB_CLASSIFY_H
#define STEERLAB_CLASSIFY_H

#include <optional>
#include <string_view>

#include "steerlab/ellipsoid.h"
#include "steerlab/qstate.h"

namespace steerlab {

/// |g| at or below this is reported as a boundary point instead of a verdict.
inline constexpr double kBoundaryBand = 1e-8;

/// Rotation-invariant positivity data of a canonical ellipsoid.
///
///   u  = 1 - tr Q + 2 c^T Q c / |c|^2          (c^T Q c term taken as 0 for |c| < 1e-12)
///   q  = 1 + 2 tr(Q^2) - 2 tr Q - (tr Q)^2 - 8 chi sqrt(det Q)
///   g1 = |c|^4 - 2 u |c|^2 + q                  (= 256 det of the canonical state)
///   g2 = 1 - tr Q - 2 chi sqrt(det Q) - |c|^2
///   g3 = 3 - |c|^2 - tr Q
///
/// The canonical state is positive iff g1, g2, g3 >= 0. g3 is implied by the
/// other two for ellipsoids inside the Bloch sphere but not for arbitrary
/// candidates, so it is kept.
template <typename Real>
struct BasicGeometricInvariants {
    Real u = 0;
    Real q = 0;
    Real g1 = 0;
    Real g2 = 0;
    Real g3 = 0;
};

using GeometricInvariants = BasicGeometricInvariants<double>;

/// Scalar ellipsoid data the conditions depend on.
template <typename Real>
struct EllipsoidScalars {
    Real c2 = 0;        // |c|^2
    Real trace = 0;     // tr Q
    Real trace_sq = 0;  // tr Q^2
    Real root_det = 0;  // sqrt(det Q)
    Real skew = 0;      // c^T Q c / |c|^2
};

template <typename Real>
BasicGeometricInvariants<Real> physicality_conditions(const EllipsoidScalars<Real> &e, int chi) {
    BasicGeometricInvariants<Real> inv;
    const Real tr = e.trace;
    inv.u = 1 - tr + 2 * e.skew;
    inv.q = 1 + 2 * e.trace_sq - 2 * tr - tr * tr - 8 * chi * e.root_det;
    inv.g1 = e.c2 * e.c2 - 2 * inv.u * e.c2 + inv.q;
    inv.g2 = 1 - tr - 2 * chi * e.root_det - e.c2;
    inv.g3 = 3 - e.c2 - tr;
    return inv;
}

GeometricInvariants physicality_invariants(const Vec3 &centre, const Mat3 &Q, int chi);
GeometricInvariants physicality_invariants(const Ellipsoid &e);

bool is_physical_geometric(const Ellipsoid &e, double tol = kBoundaryBand);
bool is_boundary(const GeometricInvariants &inv, double band = kBoundaryBand);

struct PhysicalityReport {
    GeometricInvariants invariants;
    /// False when rho_B is singular and only the eigenvalue oracle was used.
    bool geometric_available = false;
    bool geometric_physical = false;
    bool oracle_physical = false;
    /// Empty when the operator is not a state.
    std::optional<bool> entangled;
    int chirality = 0;
    bool boundary = false;
    /// Entangled states must have left-handed ellipsoids.
    bool chirality_law_holds = true;
};

/// Throws NonHermitian/BadTrace via HermitianOperator for malformed input;
/// canonicalization failure falls back to the oracle verdict.
PhysicalityReport classify_state(const HermitianOperator &rho, double tol_psd = kTolPsd);

enum class VolumeVerdict { Unphysical, EntangledIfPhysical, Indeterminate };

std::string_view volume_verdict_name(VolumeVerdict v);

/// Volume test against the separable and physical extremal volumes for a
/// centre at distance c. Throws BadRange outside V >= 0, 0 <= c <= 1.
VolumeVerdict volume_classify(double volume, double c);

}  // namespace steerlab

#endif
