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

#ifndef STEERLAB_QSTATE_H
#define STEERLAB_QSTATE_H

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <initializer_list>
#include <span>

namespace steerlab {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using CMatrix = Eigen::MatrixXcd;

/// Input validation slack for Hermiticity, unit trace and unit norm.
inline constexpr double kTolHerm = 1e-9;
/// Slack allowed below zero before the eigenvalue oracle calls an operator unphysical.
inline constexpr double kTolPsd = 1e-10;

/// Qubit labels. For two-qubit operators A is the first tensor factor and B the
/// second; for three qubits the order is (A, B, C) with A most significant.
enum class Party { A = 0, B = 1, C = 2 };

/// Dense Hermitian operator with unit trace on 1, 2 or 3 qubits.
///
/// Positivity is deliberately not required: unphysical candidates are
/// ordinary values that the classifiers are meant to reject.
class HermitianOperator {
   public:
    /// Throws NonHermitian or BadTrace. The stored matrix is the exact
    /// Hermitian part of the input.
    explicit HermitianOperator(const CMatrix &matrix);

    int dim() const {
        return static_cast<int>(m_.rows());
    }
    int num_qubits() const;
    const CMatrix &matrix() const {
        return m_;
    }
    Complex operator()(int row, int col) const {
        return m_(row, col);
    }

   private:
    CMatrix m_;
};

/// Pauli-basis coordinates (a, b, T) of a two-qubit operator.
struct PauliForm {
    Vec3 a = Vec3::Zero();
    Vec3 b = Vec3::Zero();
    Mat3 T = Mat3::Zero();

    /// 4x4 matrix with entries tr(rho sigma_mu (x) sigma_nu), sigma_0 = identity.
    Mat4 theta() const;
    /// 1/sqrt(1 - |a|^2); +infinity once |a| >= 1.
    double gamma_a() const;
    double gamma_b() const;
    /// Exchange the two parties: a <-> b, T <-> T^T.
    PauliForm swapped() const;
};

/// Normalized pure state of three qubits, amplitude index 4a + 2b + c.
class ThreeQubitPure {
   public:
    using Amplitudes = Eigen::Matrix<Complex, 8, 1>;

    /// Throws BadNorm unless the squared norm is 1 within kTolHerm.
    explicit ThreeQubitPure(const Amplitudes &amplitudes);

    const Amplitudes &amplitudes() const {
        return amps_;
    }
    HermitianOperator density() const;

   private:
    Amplitudes amps_;
};

/// Single-qubit Pauli matrix; index 0 is the identity.
const Eigen::Matrix2cd &pauli(int index);

PauliForm pauli_decompose(const HermitianOperator &rho);
HermitianOperator pauli_compose(const PauliForm &pf);

/// Transposes the tensor factor belonging to `party` (two-qubit operators only).
HermitianOperator partial_transpose(const HermitianOperator &rho, Party party);

/// Reduced operator on the `keep` parties, in their natural order.
/// Throws BadPartition for empty, repeated or out-of-range parties.
HermitianOperator partial_trace(const HermitianOperator &op, std::span<const Party> keep);
HermitianOperator partial_trace(const HermitianOperator &op, std::initializer_list<Party> keep);

double min_eigenvalue(const HermitianOperator &op);
bool is_physical_oracle(const HermitianOperator &op, double tol_psd = kTolPsd);

/// Peres-Horodecki test. Throws UnphysicalInput if rho is not a state.
bool is_entangled_ppt(const HermitianOperator &rho, double tol_psd = kTolPsd);

/// Square root of a positive semidefinite matrix; eigenvalues below zero are
/// clamped before the root.
CMatrix psd_sqrt(const CMatrix &m);

}  // namespace steerlab

#endif
