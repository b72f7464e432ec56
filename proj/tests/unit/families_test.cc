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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.h"
#include "steerlab/classify.h"
#include "steerlab/concurrence.h"
#include "steerlab/error.h"

namespace steerlab {
namespace {

constexpr double kPi = std::numbers::pi;

Ellipsoid alice(const HermitianOperator &rho) {
    return steering_ellipsoid(pauli_decompose(rho), Party::A);
}

double sphere_sep_radius(double c) {
    return (std::sqrt(4.0 - 3.0 * c * c) - 1.0) / 3.0;
}

TEST(Werner, Examples) {
    EXPECT_LT((werner(0.0).matrix() - CMatrix::Identity(4, 4) / 4.0).norm(), 1e-16);
    Ellipsoid e = alice(werner(1.0 / 3.0));
    EXPECT_NEAR(e.semiaxes()(0), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(physicality_invariants(e.centre, e.Q, 1).g1, 0.0, 1e-14);
    HermitianOperator singlet = werner(1.0);
    EXPECT_NEAR((singlet.matrix() * singlet.matrix()).trace().real(), 1.0, 1e-15);
    EXPECT_NEAR(alice(singlet).volume(), 4 * kPi / 3, 1e-14);
    EXPECT_THROW(werner(1.5), Error);
}

TEST(Inept, Examples) {
    HermitianOperator half = inept(0.6, 0.5);
    Ellipsoid e = alice(half);
    EXPECT_LT(e.centre.norm(), 1e-15);
    EXPECT_LT((e.Q - 0.36 * Mat3::Identity()).norm(), 1e-14);

    for (double r : {0.2, 0.5, 0.9}) {
        for (double eps : {0.1, 0.8}) {
            Ellipsoid b = alice(inept(r, eps));
            EXPECT_LT((b.centre - Vec3(0, 0, (2 * eps - 1) * (1 - r))).norm(), 1e-14);
            EXPECT_LT((b.Q - r * r * Mat3::Identity()).norm(), 1e-14);
            EXPECT_EQ(b.chirality, -1);
        }
    }
    Ellipsoid point = alice(inept(0.0, 0.3));
    EXPECT_LT(point.Q.norm(), 1e-15);
    EXPECT_THROW(inept(0.5, -0.1), Error);
}

TEST(MaxVolumeCanonical, Examples) {
    Eigen::Vector4cd psi_plus(0, 1, 1, 0);
    psi_plus /= std::sqrt(2.0);
    EXPECT_LT((max_volume_canonical(0.0).matrix() - oracle::ket_density(psi_plus)).norm(), 1e-15);
    // c = 1: Alice at the north pole, Bob maximally mixed.
    CMatrix pole = CMatrix::Zero(4, 4);
    pole(0, 0) = pole(1, 1) = 0.5;
    EXPECT_LT((max_volume_canonical(1.0).matrix() - pole).norm(), 1e-15);
    HermitianOperator half = max_volume_canonical(0.5);
    EXPECT_NEAR(alice(half).volume(), kPi / 3, 1e-14);
    EXPECT_NEAR(concurrence(half), std::sqrt(0.5), 1e-12);
}

TEST(MaxVolumeCanonical, StructureFromDefinition) {
    for (double c : {0.1, 0.5, 0.9}) {
        HermitianOperator rho = max_volume_canonical(c);
        Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
        EXPECT_NEAR(es.eigenvalues()(0), 0.0, 1e-15);
        EXPECT_NEAR(es.eigenvalues()(1), 0.0, 1e-15);
        PauliForm pf = pauli_decompose(rho);
        EXPECT_LT(pf.b.norm(), 1e-15);
        EXPECT_LT((pf.a - Vec3(0, 0, c)).norm(), 1e-15);
        // (1 - c/2)|psi_c><psi_c| + (c/2)|00><00|.
        Eigen::Vector4cd psi(0, 1, std::sqrt(1 - c), 0);
        psi /= std::sqrt(2 - c);
        CMatrix expected = (1 - c / 2) * oracle::ket_density(psi);
        expected(0, 0) += c / 2;
        EXPECT_LT((rho.matrix() - expected).norm(), 1e-15);
    }
}

TEST(MaxVolumeGeneral, Examples) {
    for (double c : {0.2, 0.6}) {
        EXPECT_LT((max_volume_general(c, Vec3::Zero()).matrix() - max_volume_canonical(c).matrix()).norm(), 1e-15);
        for (const Vec3 &b : {Vec3(0, 0, 0.5), Vec3(0.3, -0.4, 0.1)}) {
            HermitianOperator rho = max_volume_general(c, b);
            PauliForm pf = pauli_decompose(rho);
            EXPECT_LT((pf.b - b).norm(), 1e-14);
            Ellipsoid ea = alice(rho);
            Ellipsoid canon = alice(max_volume_canonical(c));
            EXPECT_LT((ea.centre - canon.centre).norm(), 1e-9);
            EXPECT_LT((ea.Q - canon.Q).norm(), 1e-9);
            EXPECT_NEAR(concurrence(rho), std::sqrt(1 - c) / pf.gamma_b(), 1e-10);
            EXPECT_NEAR(oracle::wootters(rho.matrix()), std::sqrt(1 - c) / pf.gamma_b(), 1e-8);

            // Bob's ellipsoid is maximal for its own centre.
            Ellipsoid eb = steering_ellipsoid(pf, Party::B);
            double cb = eb.centre.norm();
            EXPECT_NEAR(eb.volume(), 4 * kPi / 3 * (1 - cb) * (1 - cb), 1e-9);
            double ga2 = pf.gamma_a() * pf.gamma_a();
            double gb2 = pf.gamma_b() * pf.gamma_b();
            EXPECT_NEAR(gb2 * (1 - cb), ga2 * (1 - ea.centre.norm()), 1e-9);
        }
    }
    EXPECT_THROW(max_volume_general(0.3, Vec3(0, 0, 1.0)), Error);
}

TEST(AmplitudeDamping, EqualsMaximalVolumeState) {
    Eigen::Vector4cd psi_plus(0, 1, 1, 0);
    psi_plus /= std::sqrt(2.0);
    EXPECT_LT((amplitude_damping_choi(0.0).matrix() - oracle::ket_density(psi_plus)).norm(), 1e-15);
    EXPECT_LT((amplitude_damping_choi(1.0).matrix() - max_volume_canonical(1.0).matrix()).norm(), 1e-15);
    for (int k = 0; k <= 100; ++k) {
        double c = 0.01 * k;
        EXPECT_LE((amplitude_damping_choi(c).matrix() - max_volume_canonical(c).matrix()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(ExtremalProfile, Examples) {
    Vec3 e0 = extremal_profile(ExtremalKind::EllipsePhys, 0.0);
    EXPECT_NEAR(e0(0), 0.5, 1e-15);
    EXPECT_NEAR(e0(1), 0.5, 1e-15);
    EXPECT_EQ(e0(2), 0.0);
    Vec3 sep = extremal_profile(ExtremalKind::OblateSep, 0.0);
    EXPECT_LT((sep - Vec3::Constant(1.0 / 3.0)).norm(), 1e-15);
    EXPECT_LT((sep - extremal_profile(ExtremalKind::SphereSep, 0.0)).norm(), 1e-15);
    Vec3 ob = extremal_profile(ExtremalKind::OblatePhys, 0.36);
    EXPECT_LT((ob - Vec3(0.8, 0.8, 0.64)).norm(), 1e-15);
    EXPECT_NEAR(kFourPiOverThree * ob.prod(), boundary_volumes(0.36).max, 1e-15);
    EXPECT_THROW(extremal_profile(ExtremalKind::CirclePhys, -0.1), Error);
}

TEST(ExtremalProfile, MatchesPositivityOracle) {
    for (double c : {0.0, 0.2, 0.5, 0.8}) {
        EXPECT_LT((extremal_profile(ExtremalKind::EllipsePhys, c) - oracle::brute_ellipse_phys(c)).norm(), 1e-6) << c;
        EXPECT_LT((extremal_profile(ExtremalKind::CirclePhys, c) - oracle::brute_circle_phys(c)).norm(), 1e-9) << c;
        EXPECT_LT((extremal_profile(ExtremalKind::SpherePhys, c) - oracle::brute_sphere(c, -1)).norm(), 1e-9) << c;
        EXPECT_LT((extremal_profile(ExtremalKind::SphereSep, c) - oracle::brute_sphere(c, 1)).norm(), 1e-9) << c;
        EXPECT_LT((extremal_profile(ExtremalKind::OblateSep, c) - oracle::brute_oblate(c, 1)).norm(), 1e-6) << c;
        EXPECT_LT((extremal_profile(ExtremalKind::OblatePhys, c) - oracle::brute_oblate(c, -1)).norm(), 1e-5) << c;
    }
}

TEST(ExtremalProfile, EllipseAxesDecreaseWithCentre) {
    Vec3 prev = extremal_profile(ExtremalKind::EllipsePhys, 0.0);
    for (int k = 1; k <= 1000; ++k) {
        Vec3 s = extremal_profile(ExtremalKind::EllipsePhys, 0.001 * k);
        EXPECT_LT(s(0), prev(0));
        EXPECT_LT(s(1), prev(1));
        prev = s;
    }
}

TEST(ExtremalProfile, BoundaryStatesOnBoundary) {
    for (int k = 0; k <= 100; ++k) {
        double c = 0.01 * k;
        for (ExtremalKind kind : {ExtremalKind::OblatePhys, ExtremalKind::OblateSep}) {
            Ellipsoid e = extremal_ellipsoid(kind, c);
            EXPECT_LE(std::abs(physicality_invariants(e).g1), 1e-9) << c;
        }
        // Maximal ellipsoid touches the north pole.
        Vec3 s = extremal_profile(ExtremalKind::OblatePhys, c);
        EXPECT_NEAR(c + s(2), 1.0, 1e-15);
    }
}

TEST(ExtremalProfile, MaximalVolumeStateHasOblateProfile) {
    for (int k = 0; k < 100; ++k) {
        double c = 0.01 * k;
        Vec3 s = alice(max_volume_canonical(c)).semiaxes();
        Vec3 p = extremal_profile(ExtremalKind::OblatePhys, c);
        std::sort(p.data(), p.data() + 3, std::greater<>());
        EXPECT_LT((s - p).cwiseAbs().maxCoeff(), 1e-10) << c;
    }
}

TEST(ExtremalState, RealizesTheEllipsoid) {
    for (ExtremalKind kind : kAllExtremalKinds) {
        for (double c : {0.0, 0.3, 0.6}) {
            HermitianOperator rho = extremal_state(kind, c);
            Ellipsoid e = alice(rho);
            Ellipsoid expected = extremal_ellipsoid(kind, c);
            EXPECT_LT((e.centre - expected.centre).norm(), 1e-14);
            EXPECT_LT((e.Q - expected.Q).norm(), 1e-14);
            EXPECT_GE(oracle::min_eig(rho.matrix()), -1e-12) << extremal_kind_name(kind) << " " << c;
            if (!is_planar(kind)) {
                EXPECT_EQ(e.chirality, extremal_chirality(kind));
            }
        }
    }
    EXPECT_EQ(extremal_ellipsoid(ExtremalKind::EllipsePhys, 0.4).centre, Vec3(0.4, 0, 0));
    EXPECT_EQ(extremal_ellipsoid(ExtremalKind::OblatePhys, 0.4).centre, Vec3(0, 0, 0.4));
}

TEST(ExtremalKind, Names) {
    for (ExtremalKind kind : kAllExtremalKinds) {
        EXPECT_EQ(parse_extremal_kind(extremal_kind_name(kind)), kind);
    }
    EXPECT_FALSE(parse_extremal_kind("hexagon").has_value());
    EXPECT_EQ(extremal_chirality(ExtremalKind::CirclePhys), 0);
    EXPECT_EQ(extremal_chirality(ExtremalKind::OblateSep), 1);
    EXPECT_EQ(extremal_chirality(ExtremalKind::SpherePhys), -1);
}

TEST(BoundaryVolumes, Examples) {
    BoundaryVolumes v0 = boundary_volumes(0.0);
    EXPECT_NEAR(v0.sep, 4 * kPi / 81, 1e-15);
    EXPECT_NEAR(v0.max, 4 * kPi / 3, 1e-15);
    EXPECT_NEAR(v0.sep, kFourPiOverThree * std::pow(1.0 / 3.0, 3), 1e-15);
    BoundaryVolumes v1 = boundary_volumes(1.0);
    EXPECT_NEAR(v1.sep, 0.0, 1e-15);
    EXPECT_NEAR(v1.max, 0.0, 1e-15);
    EXPECT_NEAR(boundary_volumes(0.5).max, kPi / 3, 1e-15);
}

TEST(BoundaryVolumes, NestedWithEqualityOnlyAtOne) {
    for (int k = 0; k <= 1000; ++k) {
        double c = 0.001 * k;
        BoundaryVolumes v = boundary_volumes(c);
        if (k < 1000) {
            EXPECT_LT(v.sep, v.max) << c;
        } else {
            EXPECT_NEAR(v.sep, v.max, 1e-15);
        }
        // Separable volume is the oblate-sep profile's volume.
        EXPECT_NEAR(v.sep, kFourPiOverThree * extremal_profile(ExtremalKind::OblateSep, c).prod(), 1e-14);
    }
}

TEST(Families, GeneratorsArePhysicalWithDocumentedSeparability) {
    for (int k = 0; k <= 20; ++k) {
        double p = 0.05 * k;
        HermitianOperator w = werner(p);
        EXPECT_TRUE(is_physical_oracle(w));
        PhysicalityReport r = classify_state(w);
        if (std::abs(p - 1.0 / 3.0) > 1e-3) {
            EXPECT_EQ(*r.entangled, p > 1.0 / 3.0) << p;
        }
    }
    for (double r : {0.1, 0.3, 0.45, 0.7, 0.9}) {
        for (double eps : {0.2, 0.5, 0.8}) {
            HermitianOperator rho = inept(r, eps);
            EXPECT_TRUE(is_physical_oracle(rho));
            double c = alice(rho).centre.norm();
            bool expected = r > sphere_sep_radius(c);
            if (std::abs(r - sphere_sep_radius(c)) > 1e-3) {
                EXPECT_EQ(*classify_state(rho).entangled, expected) << r << " " << eps;
            }
        }
    }
    for (int k = 0; k <= 10; ++k) {
        double c = 0.1 * k;
        HermitianOperator rho = max_volume_canonical(c);
        EXPECT_TRUE(is_physical_oracle(rho));
        EXPECT_EQ(is_entangled_ppt(rho), c < 1.0) << c;
    }
}

TEST(NestedTetrahedron, Examples) {
    EXPECT_TRUE(nested_tetrahedron_spheres(1.0, 1.0 / 3.0, 0.0));
    EXPECT_FALSE(nested_tetrahedron_spheres(1.0, 0.34, 0.0));
    EXPECT_TRUE(nested_tetrahedron_spheres(2.0, 0.5, 1.0));
    EXPECT_THROW(nested_tetrahedron_spheres(0.0, 0.1, 0.0), Error);
    EXPECT_THROW(nested_tetrahedron_spheres(1.0, 1.2, 0.0), Error);
}

TEST(NestedTetrahedron, SeparableSphereCurve) {
    for (int k = 0; k <= 100; ++k) {
        double c = 0.01 * k;
        double r = extremal_profile(ExtremalKind::SphereSep, c)(0);
        EXPECT_NEAR(c * c, (1 + r) * (1 - 3 * r), 1e-10);
        EXPECT_TRUE(nested_tetrahedron_spheres(1.0, r * (1 - 1e-9), c));
        EXPECT_FALSE(nested_tetrahedron_spheres(1.0, std::min(1.0, r + 1e-6), c));
    }
}

TEST(NestedTriangle, Examples) {
    EXPECT_TRUE(nested_triangle_circles(0.5, 0.0));
    EXPECT_FALSE(nested_triangle_circles(0.51, 0.0));
    EXPECT_TRUE(nested_triangle_circles(0.3, 0.5));
    EXPECT_THROW(nested_triangle_circles(-0.1, 0.0), Error);
    for (int k = 0; k <= 100; ++k) {
        double c = 0.01 * k;
        double r = extremal_profile(ExtremalKind::CirclePhys, c)(0);
        EXPECT_TRUE(nested_triangle_circles(r, c));
        EXPECT_FALSE(nested_triangle_circles(r + 1e-9, c));
    }
}

}  // namespace
}  // namespace steerlab
