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

#ifndef STEERLAB_CONCURRENCE_H
#define STEERLAB_CONCURRENCE_H

#include <array>
#include <optional>

#include "steerlab/qstate.h"

namespace steerlab {

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), where l_i are the square
/// roots of the eigenvalues of rho (sy sy) rho* (sy sy), largest first.
/// Throws UnphysicalInput for non-states.
double concurrence(const HermitianOperator &rho);

/// tau = (1/4)(1 + sum_i t_i sigma_i (x) sigma_i).
struct BellDiagonalSpec {
    Vec3 t = Vec3::Zero();
    /// Tetrahedron weights (p0..p3) when the spec came from simplex_to_bell_diagonal.
    std::optional<std::array<double, 4>> weights;

    HermitianOperator state() const;
    /// Weights of the four Bell projectors, singlet first.
    std::array<double, 4> bell_weights() const;
    bool is_physical(double tol = kTolPsd) const;
};

/// Closed form max{0, (t1 + t2 - t3 - 1) / 2} after permuting and flipping
/// pairs of signs so that t1 >= t2 >= |t3|. Throws UnphysicalInput.
double bell_diagonal_concurrence(const BellDiagonalSpec &spec);

/// Point s = p0 (1,1,1) + p1 (1,0,0) + p2 (0,1,0) + p3 (0,0,1) of the
/// entangled tetrahedron, mapped to t = (s1, s2, -s3). Throws BadWeights.
BellDiagonalSpec simplex_to_bell_diagonal(const std::array<double, 4> &p);

struct VolumeBound {
    double concurrence = 0.0;
    /// gamma_b^-1 (3 V / 4 pi)^(1/4) with V from Alice's ellipsoid.
    double bound = 0.0;
    double slack = 0.0;
    double obesity = 0.0;
    double obesity_slack = 0.0;
    bool saturated = false;
};

/// Throws UnphysicalInput or SteererPure.
VolumeBound concurrence_volume_bound(const HermitianOperator &rho);

/// sqrt(1 - c). Throws BadRange outside [0, 1].
double max_concurrence_for_centre(double c);

}  // namespace steerlab

#endif
