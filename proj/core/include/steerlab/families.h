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

#ifndef STEERLAB_FAMILIES_H
#define STEERLAB_FAMILIES_H

#include <optional>
#include <string_view>

#include "steerlab/ellipsoid.h"
#include "steerlab/qstate.h"

namespace steerlab {

/// Closed-form extremal ellipsoid shapes, indexed by boundary and chirality.
/// Planar kinds lie in the equatorial plane with the centre on x; solid kinds
/// have the centre on z with the distinct (radial) axis along z.
enum class ExtremalKind { CirclePhys, EllipsePhys, SphereSep, SpherePhys, OblateSep, OblatePhys };

inline constexpr ExtremalKind kAllExtremalKinds[] = {
    ExtremalKind::CirclePhys, ExtremalKind::EllipsePhys, ExtremalKind::SphereSep,
    ExtremalKind::SpherePhys, ExtremalKind::OblateSep,   ExtremalKind::OblatePhys,
};

std::string_view extremal_kind_name(ExtremalKind kind);
std::optional<ExtremalKind> parse_extremal_kind(std::string_view name);

/// 0 for planar kinds, +1 for separable boundaries, -1 for physical boundaries.
int extremal_chirality(ExtremalKind kind);
bool is_planar(ExtremalKind kind);

/// p |psi-><psi-| + (1 - p) identity / 4.
HermitianOperator werner(double p);

/// r |phi_eps><phi_eps| + (1 - r) rho' (x) rho' with |phi_eps> = sqrt(eps)|00> + sqrt(1-eps)|11>.
HermitianOperator inept(double r, double eps);

/// Rank-2 canonical state whose ellipsoid has the largest volume for a centre at (0, 0, c).
HermitianOperator max_volume_canonical(double c);

/// max_volume_canonical(c) with Bob's marginal boosted to Bloch vector b.
HermitianOperator max_volume_general(double c, const Vec3 &b);

/// Choi state of the amplitude-damping channel with decay probability c,
/// built from its Kraus operators acting on Alice's half of |psi+>.
HermitianOperator amplitude_damping_choi(double c);

/// Semiaxes in x, y, z order (third entry 0 for planar kinds).
Vec3 extremal_profile(ExtremalKind kind, double c);

/// Canonical ellipsoid realizing the profile: centre c on the kind's axis,
/// Q = diag(s^2), chirality of the kind.
Ellipsoid extremal_ellipsoid(ExtremalKind kind, double c);

/// Canonical aligned operator with that ellipsoid: a = centre, b = 0,
/// T = diag(s1, s2, chi' s3) where chi' = -1 only for left-handed kinds.
HermitianOperator extremal_state(ExtremalKind kind, double c);

struct BoundaryVolumes {
    double sep = 0.0;
    double max = 0.0;
};

BoundaryVolumes boundary_volumes(double c);

/// Existence of a tetrahedron inscribed in a sphere of radius R and
/// circumscribed about a sphere of radius r whose centres are c apart.
bool nested_tetrahedron_spheres(double R, double r, double c);

/// Existence of a triangle inscribed in the unit circle and circumscribed
/// about a circle of radius r whose centre is c from the origin.
bool nested_triangle_circles(double r, double c);

}  // namespace steerlab

#endif
