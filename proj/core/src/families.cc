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

#include "steerlab/families.h"

#include <cmath>

#include "steerlab/error.h"

namespace steerlab {

namespace {

void require_unit_interval(double x, const char *name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::BadRange, std::string(name) + " must lie in [0, 1]");
    }
}

CMatrix outer(const Eigen::Vector4cd &v) {
    return v * v.adjoint();
}

CMatrix identity_kron(const CMatrix &b) {
    CMatrix out = CMatrix::Zero(4, 4);
    out.block(0, 0, 2, 2) = b;
    out.block(2, 2, 2, 2) = b;
    return out;
}

}  // namespace

std::string_view extremal_kind_name(ExtremalKind kind) {
    switch (kind) {
        case ExtremalKind::CirclePhys:
            return "circle-phys";
        case ExtremalKind::EllipsePhys:
            return "ellipse-phys";
        case ExtremalKind::SphereSep:
            return "sphere-sep";
        case ExtremalKind::SpherePhys:
            return "sphere-phys";
        case ExtremalKind::OblateSep:
            return "oblate-sep";
        case ExtremalKind::OblatePhys:
            return "oblate-phys";
    }
    return "";
}

std::optional<ExtremalKind> parse_extremal_kind(std::string_view name) {
    for (ExtremalKind k : kAllExtremalKinds) {
        if (extremal_kind_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

int extremal_chirality(ExtremalKind kind) {
    switch (kind) {
        case ExtremalKind::CirclePhys:
        case ExtremalKind::EllipsePhys:
            return 0;
        case ExtremalKind::SphereSep:
        case ExtremalKind::OblateSep:
            return 1;
        case ExtremalKind::SpherePhys:
        case ExtremalKind::OblatePhys:
            return -1;
    }
    return 0;
}

bool is_planar(ExtremalKind kind) {
    return kind == ExtremalKind::CirclePhys || kind == ExtremalKind::EllipsePhys;
}

HermitianOperator werner(double p) {
    require_unit_interval(p, "p");
    Eigen::Vector4cd singlet(0.0, M_SQRT1_2, -M_SQRT1_2, 0.0);
    CMatrix m = p * outer(singlet) + (1.0 - p) / 4.0 * CMatrix::Identity(4, 4);
    return HermitianOperator(m);
}

HermitianOperator inept(double r, double eps) {
    require_unit_interval(r, "r");
    require_unit_interval(eps, "eps");
    Eigen::Vector4cd phi(std::sqrt(eps), 0.0, 0.0, std::sqrt(1.0 - eps));
    Eigen::Matrix2cd marginal = Eigen::Matrix2cd::Zero();
    marginal(0, 0) = eps;
    marginal(1, 1) = 1.0 - eps;
    CMatrix product = CMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            product.block(2 * i, 2 * j, 2, 2) = marginal(i, j) * marginal;
        }
    }
    return HermitianOperator(r * outer(phi) + (1.0 - r) * product);
}

HermitianOperator max_volume_canonical(double c) {
    require_unit_interval(c, "c");
    CMatrix m = CMatrix::Zero(4, 4);
    // (1 - c/2)|psi_c><psi_c| with |psi_c> = (|01> + sqrt(1-c)|10>) / sqrt(2-c).
    Eigen::Vector4cd psi(0.0, 1.0, std::sqrt(1.0 - c), 0.0);
    m += 0.5 * outer(psi);
    m(0, 0) += c / 2.0;
    return HermitianOperator(m);
}

HermitianOperator max_volume_general(double c, const Vec3 &b) {
    require_unit_interval(c, "c");
    if (!(b.norm() < 1.0)) {
        throw Error(ErrorCode::BadRange, "|b| must be < 1");
    }
    Eigen::Matrix2cd rho_b = 0.5 * (pauli(0) + b(0) * pauli(1) + b(1) * pauli(2) + b(2) * pauli(3));
    CMatrix filter = identity_kron(psd_sqrt(2.0 * CMatrix(rho_b)));
    CMatrix out = filter * max_volume_canonical(c).matrix() * filter;
    out /= out.trace().real();
    return HermitianOperator(0.5 * (out + out.adjoint()));
}

HermitianOperator amplitude_damping_choi(double c) {
    require_unit_interval(c, "c");
    Eigen::Matrix2cd e0 = Eigen::Matrix2cd::Zero();
    e0(0, 0) = 1.0;
    e0(1, 1) = std::sqrt(1.0 - c);
    Eigen::Matrix2cd e1 = Eigen::Matrix2cd::Zero();
    e1(0, 1) = std::sqrt(c);

    Eigen::Vector4cd psi_plus(0.0, M_SQRT1_2, M_SQRT1_2, 0.0);
    CMatrix bell = outer(psi_plus);
    CMatrix out = CMatrix::Zero(4, 4);
    for (const Eigen::Matrix2cd &k : {e0, e1}) {
        // Kraus operator on Alice, identity on Bob.
        CMatrix kk = CMatrix::Zero(4, 4);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                kk.block(2 * i, 2 * j, 2, 2) = k(i, j) * Eigen::Matrix2cd::Identity();
            }
        }
        out += kk * bell * kk.adjoint();
    }
    return HermitianOperator(out);
}

Vec3 extremal_profile(ExtremalKind kind, double c) {
    require_unit_interval(c, "c");
    const double c2 = c * c;
    switch (kind) {
        case ExtremalKind::CirclePhys: {
            double r = (1.0 - c2) / 2.0;
            return {r, r, 0.0};
        }
        case ExtremalKind::EllipsePhys: {
            double root = std::sqrt(1.0 + 8.0 * c2);
            double s1 = (3.0 - root) / 4.0;
            double s2 = std::sqrt(std::max(0.0, 1.0 - 4.0 * c2 + root)) / std::sqrt(8.0);
            return {s1, s2, 0.0};
        }
        case ExtremalKind::SphereSep: {
            double r = (std::sqrt(4.0 - 3.0 * c2) - 1.0) / 3.0;
            return {r, r, r};
        }
        case ExtremalKind::SpherePhys: {
            double r = 1.0 - c;
            return {r, r, r};
        }
        case ExtremalKind::OblateSep: {
            double root = std::sqrt(1.0 + 3.0 * c2);
            double major = std::sqrt(std::max(0.0, 1.0 - 3.0 * c2 + root)) / std::sqrt(18.0);
            double minor = (2.0 - root) / 3.0;
            return {major, major, minor};
        }
        case ExtremalKind::OblatePhys: {
            double major = std::sqrt(1.0 - c);
            return {major, major, 1.0 - c};
        }
    }
    return Vec3::Zero();
}

Ellipsoid extremal_ellipsoid(ExtremalKind kind, double c) {
    Vec3 s = extremal_profile(kind, c);
    Ellipsoid e;
    e.centre = is_planar(kind) ? Vec3(c, 0.0, 0.0) : Vec3(0.0, 0.0, c);
    e.Q = s.cwiseProduct(s).asDiagonal();
    e.chirality = extremal_chirality(kind);
    return e;
}

HermitianOperator extremal_state(ExtremalKind kind, double c) {
    Ellipsoid e = extremal_ellipsoid(kind, c);
    Vec3 t = extremal_profile(kind, c);
    if (e.chirality < 0) {
        t(2) = -t(2);
    }
    PauliForm pf;
    pf.a = e.centre;
    pf.T = t.asDiagonal();
    return pauli_compose(pf);
}

BoundaryVolumes boundary_volumes(double c) {
    require_unit_interval(c, "c");
    const double c2 = c * c;
    BoundaryVolumes bv;
    bv.sep = 2.0 * std::numbers::pi / 81.0 * (1.0 - 9.0 * c2 + std::pow(1.0 + 3.0 * c2, 1.5));
    bv.max = kFourPiOverThree * (1.0 - c) * (1.0 - c);
    return bv;
}

bool nested_tetrahedron_spheres(double R, double r, double c) {
    if (!(R > 0.0) || !(r >= 0.0 && r <= R) || !(c >= 0.0)) {
        throw Error(ErrorCode::BadRange, "need R > 0, 0 <= r <= R, c >= 0");
    }
    return c * c <= (R + r) * (R - 3.0 * r);
}

bool nested_triangle_circles(double r, double c) {
    if (!(r >= 0.0 && r <= 1.0) || !(c >= 0.0)) {
        throw Error(ErrorCode::BadRange, "need 0 <= r <= 1, c >= 0");
    }
    return r <= (1.0 - c * c) / 2.0;
}

}  // namespace steerlab
