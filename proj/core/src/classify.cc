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

#include "steerlab/classify.h"

#include <cmath>

#include "steerlab/error.h"
#include "steerlab/families.h"

namespace steerlab {

GeometricInvariants physicality_invariants(const Vec3 &centre, const Mat3 &Q, int chi) {
    EllipsoidScalars<double> e;
    e.c2 = centre.squaredNorm();
    e.trace = Q.trace();
    e.trace_sq = (Q * Q).trace();
    e.root_det = std::sqrt(std::max(0.0, Q.determinant()));
    e.skew = e.c2 < 1e-24 ? 0.0 : centre.dot(Q * centre) / e.c2;
    return physicality_conditions(e, chi);
}

GeometricInvariants physicality_invariants(const Ellipsoid &e) {
    return physicality_invariants(e.centre, e.Q, e.chirality);
}

bool is_physical_geometric(const Ellipsoid &e, double tol) {
    GeometricInvariants inv = physicality_invariants(e);
    return inv.g1 >= -tol && inv.g2 >= -tol && inv.g3 >= -tol;
}

bool is_boundary(const GeometricInvariants &inv, double band) {
    return std::abs(inv.g1) <= band || std::abs(inv.g2) <= band || std::abs(inv.g3) <= band;
}

PhysicalityReport classify_state(const HermitianOperator &rho, double tol_psd) {
    PhysicalityReport report;
    report.oracle_physical = is_physical_oracle(rho, tol_psd);

    try {
        HermitianOperator canonical = canonicalize(rho);
        PauliForm pf = pauli_decompose(canonical);
        pf.b.setZero();
        Ellipsoid e = steering_ellipsoid(pf, Party::A);
        report.invariants = physicality_invariants(e);
        report.geometric_available = true;
        report.chirality = e.chirality;
        report.geometric_physical =
            report.invariants.g1 >= -kBoundaryBand && report.invariants.g2 >= -kBoundaryBand &&
            report.invariants.g3 >= -kBoundaryBand;
        report.boundary = is_boundary(report.invariants);
    } catch (const Error &err) {
        if (err.code() != ErrorCode::SingularMarginal) {
            throw;
        }
        report.geometric_physical = report.oracle_physical;
    }

    if (report.oracle_physical) {
        report.entangled = is_entangled_ppt(rho, tol_psd);
        if (*report.entangled && report.geometric_available) {
            report.chirality_law_holds = report.chirality == -1;
        }
    }
    return report;
}

std::string_view volume_verdict_name(VolumeVerdict v) {
    switch (v) {
        case VolumeVerdict::Unphysical:
            return "unphysical";
        case VolumeVerdict::EntangledIfPhysical:
            return "entangled-if-physical";
        case VolumeVerdict::Indeterminate:
            return "indeterminate";
    }
    return "indeterminate";
}

VolumeVerdict volume_classify(double volume, double c) {
    if (!(volume >= 0.0) || !(c >= 0.0 && c <= 1.0)) {
        throw Error(ErrorCode::BadRange, "volume_classify needs V >= 0 and 0 <= c <= 1");
    }
    BoundaryVolumes bv = boundary_volumes(c);
    if (volume > bv.max) {
        return VolumeVerdict::Unphysical;
    }
    if (volume > bv.sep) {
        return VolumeVerdict::EntangledIfPhysical;
    }
    return VolumeVerdict::Indeterminate;
}

}  // namespace steerlab
