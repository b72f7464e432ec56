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

#ifndef STEERLAB_ELLIPSOID_H
#define STEERLAB_ELLIPSOID_H

#include <numbers>

#include "steerlab/qstate.h"

namespace steerlab {

inline constexpr double kFourPiOverThree = 4.0 * std::numbers::pi / 3.0;
/// |det T| below this is a degenerate (chirality 0) ellipsoid.
inline constexpr double kTolDet = 1e-12;
/// Smallest eigenvalue a steering party's marginal may have before it counts as pure.
inline constexpr double kMarginalFloor = 1e-12;

/// Steering ellipsoid of the `party` qubit, i.e. the set of Bloch vectors the
/// other qubit can steer it to.
struct Ellipsoid {
    Vec3 centre = Vec3::Zero();
    Mat3 Q = Mat3::Zero();
    int chirality = 0;
    Party party = Party::A;

    /// Square roots of the eigenvalues of Q, largest first.
    Vec3 semiaxes() const;
    double volume() const;
    /// Largest distance from the origin of any point of the ellipsoid,
    /// i.e. the maximum of the support function over unit directions.
    double max_radius() const;
};

/// Signed singular values of a correlation matrix: |t1| >= |t2| >= |t3|,
/// t1, t2 >= 0 and the sign of det T carried by t3.
struct SignedSemiaxes {
    Vec3 t = Vec3::Zero();
};

SignedSemiaxes signed_semiaxes(const Mat3 &T);

/// Ellipsoid of the `steered` party. Throws SteererPure when the other
/// party's Bloch vector has unit length.
Ellipsoid steering_ellipsoid(const PauliForm &pf, Party steered);

/// Bob's local filter that maps his marginal to the maximally mixed state.
/// Throws SingularMarginal when rho_B is not invertible.
HermitianOperator canonicalize(const HermitianOperator &rho);

struct AlignedState {
    HermitianOperator state;
    SignedSemiaxes t;
    /// Proper rotations with rotation_a * T * rotation_b^T = diag(t).
    Mat3 rotation_a;
    Mat3 rotation_b;
};

/// Rotates a canonical state so that its correlation matrix is diagonal.
/// Throws NotCanonical if Bob's Bloch vector is not zero.
AlignedState align(const HermitianOperator &rho_canonical);

int chirality(const Mat3 &T);
int chirality(const SignedSemiaxes &t);

/// (4 pi / 3) gamma^4 |det Theta| with gamma the steering party's Lorentz factor.
double volume(const PauliForm &pf, Party steered);

/// |det Theta|^(1/4); symmetric under exchanging the parties.
double obesity(const PauliForm &pf);

}  // namespace steerlab

#endif
