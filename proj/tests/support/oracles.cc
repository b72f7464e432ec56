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

#include "oracles.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

CMat sigma(int i) {
    CMat m(2, 2);
    const Complex I(0.0, 1.0);
    switch (i) {
        case 0:
            m << 1, 0, 0, 1;
            break;
        case 1:
            m << 0, 1, 1, 0;
            break;
        case 2:
            m << 0, -I, I, 0;
            break;
        default:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMat two_qubit(const Vec3 &a, const Vec3 &b, const Mat3 &T) {
    CMat rho = kron(sigma(0), sigma(0));
    for (int i = 0; i < 3; ++i) {
        rho += a(i) * kron(sigma(i + 1), sigma(0));
        rho += b(i) * kron(sigma(0), sigma(i + 1));
        for (int j = 0; j < 3; ++j) {
            rho += T(i, j) * kron(sigma(i + 1), sigma(j + 1));
        }
    }
    return rho / 4.0;
}

Vec3 bloch_a(const CMat &rho) {
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        v(i) = (rho * kron(sigma(i + 1), sigma(0))).trace().real();
    }
    return v;
}

Vec3 bloch_b(const CMat &rho) {
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        v(i) = (rho * kron(sigma(0), sigma(i + 1))).trace().real();
    }
    return v;
}

Mat3 correlations(const CMat &rho) {
    Mat3 t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t(i, j) = (rho * kron(sigma(i + 1), sigma(j + 1))).trace().real();
        }
    }
    return t;
}

// Index (i, k) of the first and second qubit is row 2 i + k.
CMat transpose_b(const CMat &rho) {
    CMat out(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = rho(2 * i + l, 2 * j + k);
    return out;
}

CMat transpose_a(const CMat &rho) {
    CMat out(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = rho(2 * j + k, 2 * i + l);
    return out;
}

CMat trace_b(const CMat &rho) {
    CMat out = CMat::Zero(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) out(i, j) += rho(2 * i + k, 2 * j + k);
    return out;
}

CMat trace_a(const CMat &rho) {
    CMat out = CMat::Zero(2, 2);
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int i = 0; i < 2; ++i) out(k, l) += rho(2 * i + k, 2 * i + l);
    return out;
}

double min_eig(const CMat &m) {
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

bool is_psd(const CMat &m, double tol) {
    return min_eig(m) >= -tol;
}

double wootters(const CMat &rho) {
    // Extended precision keeps the square roots of near-zero eigenvalues accurate.
    using LMat = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;
    LMat r = rho.cast<std::complex<long double>>();
    LMat yy = kron(sigma(2), sigma(2)).cast<std::complex<long double>>();
    LMat tilde = yy * r.conjugate() * yy;
    Eigen::ComplexEigenSolver<LMat> es(r * tilde);
    std::vector<long double> lam;
    for (int i = 0; i < 4; ++i) {
        lam.push_back(std::sqrt(std::max(0.0L, es.eigenvalues()(i).real())));
    }
    std::sort(lam.rbegin(), lam.rend());
    return static_cast<double>(std::max(0.0L, lam[0] - lam[1] - lam[2] - lam[3]));
}

Vec3 steered_bloch(const CMat &rho, const Vec3 &n) {
    CMat proj = 0.5 * sigma(0);
    for (int i = 0; i < 3; ++i) {
        proj += 0.5 * n(i) * sigma(i + 1);
    }
    CMat conditional = trace_b(rho * kron(sigma(0), proj));
    double p = conditional.trace().real();
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        v(i) = (conditional * sigma(i + 1)).trace().real() / p;
    }
    return v;
}

CMat ket_density(const Eigen::VectorXcd &psi) {
    return psi * psi.adjoint();
}

namespace {

bool physical(const Vec3 &a, const Mat3 &T) {
    return is_psd(two_qubit(a, Vec3::Zero(), T), 1e-14);
}

}  // namespace

Vec3 brute_ellipse_phys(double c) {
    const Vec3 a(c, 0.0, 0.0);
    auto s2_max = [&](double s1) {
        return bisect_max([&](double s2) { return physical(a, Mat3(Vec3(s1, s2, 0.0).asDiagonal())); }, 0.0, 1.0, 80);
    };
    double s1_edge = bisect_max([&](double s1) { return physical(a, Mat3(Vec3(s1, 0.0, 0.0).asDiagonal())); }, 0.0, 1.0, 80);
    double s1 = golden_max([&](double x) { return std::log(x) + std::log(s2_max(x)); }, 1e-9, s1_edge, 120);
    return {s1, s2_max(s1), 0.0};
}

Vec3 brute_circle_phys(double c) {
    const Vec3 a(c, 0.0, 0.0);
    double r = bisect_max([&](double r) { return physical(a, Mat3(Vec3(r, r, 0.0).asDiagonal())); }, 0.0, 1.0);
    return {r, r, 0.0};
}

Vec3 brute_sphere(double c, int chi) {
    const Vec3 a(0.0, 0.0, c);
    double r = bisect_max([&](double r) { return physical(a, Mat3(Vec3(r, r, chi * r).asDiagonal())); }, 0.0, 1.0);
    return {r, r, r};
}

Vec3 brute_oblate(double c, int chi) {
    const Vec3 a(0.0, 0.0, c);
    auto lowest = [&](double s, double sr) { return min_eig(two_qubit(a, Vec3::Zero(), Mat3(Vec3(s, s, chi * sr).asDiagonal()))); };
    // For fixed s the admissible radial semiaxes form an interval that need
    // not contain 0, so start from the most positive point of the slice.
    auto centre_of_slice = [&](double s) { return golden_max([&](double sr) { return lowest(s, sr); }, 0.0, 1.0, 100); };
    auto radial_max = [&](double s) {
        double start = centre_of_slice(s);
        return bisect_max([&](double sr) { return lowest(s, sr) >= -1e-14; }, start, 1.0, 80);
    };
    double edge = bisect_max([&](double s) { return lowest(s, centre_of_slice(s)) >= -1e-14; }, 0.0, 1.0, 80);
    double s = golden_max([&](double x) { return 2.0 * std::log(x) + std::log(radial_max(x)); }, 1e-9, edge, 120);
    return {s, s, radial_max(s)};
}

}  // namespace oracle
