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

#include "steerlab/qstate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "steerlab/error.h"

namespace steerlab {

namespace {

int qubits_for_dim(Eigen::Index dim) {
    switch (dim) {
        case 2:
            return 1;
        case 4:
            return 2;
        case 8:
            return 3;
        default:
            return -1;
    }
}

double gamma_of(const Vec3 &v) {
    double n2 = v.squaredNorm();
    if (n2 >= 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 1.0 / std::sqrt(1.0 - n2);
}

CMatrix kron(const CMatrix &x, const CMatrix &y) {
    CMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return out;
}

void require_two_qubits(const HermitianOperator &rho, const char *what) {
    if (rho.dim() != 4) {
        throw Error(ErrorCode::BadPartition, std::string(what) + " expects a two-qubit operator");
    }
}

}  // namespace

HermitianOperator::HermitianOperator(const CMatrix &matrix) {
    if (matrix.rows() != matrix.cols() || qubits_for_dim(matrix.rows()) < 0) {
        throw Error(ErrorCode::BadPartition, "operator dimension must be 2, 4 or 8");
    }
    if (!matrix.allFinite()) {
        throw Error(ErrorCode::NonHermitian, "operator has non-finite entries");
    }
    double asym = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kTolHerm) {
        throw Error(ErrorCode::NonHermitian, "max |m - m^dagger| = " + std::to_string(asym));
    }
    m_ = 0.5 * (matrix + matrix.adjoint());
    double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > kTolHerm) {
        throw Error(ErrorCode::BadTrace, "trace = " + std::to_string(tr));
    }
}

int HermitianOperator::num_qubits() const {
    return qubits_for_dim(m_.rows());
}

Mat4 PauliForm::theta() const {
    Mat4 th;
    th(0, 0) = 1.0;
    th.block<3, 1>(1, 0) = a;
    th.block<1, 3>(0, 1) = b.transpose();
    th.block<3, 3>(1, 1) = T;
    return th;
}

double PauliForm::gamma_a() const {
    return gamma_of(a);
}

double PauliForm::gamma_b() const {
    return gamma_of(b);
}

PauliForm PauliForm::swapped() const {
    return PauliForm{b, a, T.transpose()};
}

ThreeQubitPure::ThreeQubitPure(const Amplitudes &amplitudes) : amps_(amplitudes) {
    double n2 = amps_.squaredNorm();
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kTolHerm) {
        throw Error(ErrorCode::BadNorm, "squared norm = " + std::to_string(n2));
    }
}

HermitianOperator ThreeQubitPure::density() const {
    return HermitianOperator(amps_ * amps_.adjoint());
}

const Eigen::Matrix2cd &pauli(int index) {
    static const std::array<Eigen::Matrix2cd, 4> table = [] {
        const Complex i(0.0, 1.0);
        std::array<Eigen::Matrix2cd, 4> t;
        t[0] << 1, 0, 0, 1;
        t[1] << 0, 1, 1, 0;
        t[2] << 0, -i, i, 0;
        t[3] << 1, 0, 0, -1;
        return t;
    }();
    return table.at(static_cast<size_t>(index));
}

PauliForm pauli_decompose(const HermitianOperator &rho) {
    require_two_qubits(rho, "pauli_decompose");
    Mat4 th;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            Complex v = (rho.matrix() * kron(pauli(mu), pauli(nu))).trace();
            if (std::abs(v.imag()) > kTolHerm) {
                throw Error(ErrorCode::NonHermitian, "complex Pauli coefficient");
            }
            th(mu, nu) = v.real();
        }
    }
    PauliForm pf;
    pf.a = th.block<3, 1>(1, 0);
    pf.b = th.block<1, 3>(0, 1).transpose();
    pf.T = th.block<3, 3>(1, 1);
    return pf;
}

HermitianOperator pauli_compose(const PauliForm &pf) {
    Mat4 th = pf.theta();
    CMatrix m = CMatrix::Zero(4, 4);
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            if (th(mu, nu) != 0.0) {
                m += th(mu, nu) * kron(pauli(mu), pauli(nu));
            }
        }
    }
    return HermitianOperator(0.25 * m);
}

HermitianOperator partial_transpose(const HermitianOperator &rho, Party party) {
    require_two_qubits(rho, "partial_transpose");
    if (party == Party::C) {
        throw Error(ErrorCode::BadPartition, "party C does not exist for two qubits");
    }
    int shift = party == Party::A ? 1 : 0;
    CMatrix out(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            int bi = (i >> shift) & 1;
            int bj = (j >> shift) & 1;
            int ii = (i & ~(1 << shift)) | (bj << shift);
            int jj = (j & ~(1 << shift)) | (bi << shift);
            out(ii, jj) = rho(i, j);
        }
    }
    return HermitianOperator(out);
}

HermitianOperator partial_trace(const HermitianOperator &op, std::span<const Party> keep) {
    const int n = op.num_qubits();
    std::vector<bool> kept(static_cast<size_t>(n), false);
    for (Party p : keep) {
        int k = static_cast<int>(p);
        if (k >= n || kept[static_cast<size_t>(k)]) {
            throw Error(ErrorCode::BadPartition, "invalid party list for partial trace");
        }
        kept[static_cast<size_t>(k)] = true;
    }
    if (keep.empty()) {
        throw Error(ErrorCode::BadPartition, "must keep at least one party");
    }

    // Bit of party k inside a full index is (n - 1 - k).
    std::vector<int> kept_bits;
    std::vector<int> traced_bits;
    for (int k = 0; k < n; ++k) {
        (kept[static_cast<size_t>(k)] ? kept_bits : traced_bits).push_back(n - 1 - k);
    }
    auto compress = [](int index, const std::vector<int> &bits) {
        int out = 0;
        for (int bit : bits) {
            out = (out << 1) | ((index >> bit) & 1);
        }
        return out;
    };

    const int rdim = 1 << kept_bits.size();
    CMatrix out = CMatrix::Zero(rdim, rdim);
    for (int i = 0; i < op.dim(); ++i) {
        for (int j = 0; j < op.dim(); ++j) {
            if (compress(i, traced_bits) == compress(j, traced_bits)) {
                out(compress(i, kept_bits), compress(j, kept_bits)) += op(i, j);
            }
        }
    }
    return HermitianOperator(out);
}

HermitianOperator partial_trace(const HermitianOperator &op, std::initializer_list<Party> keep) {
    return partial_trace(op, std::span<const Party>(keep.begin(), keep.size()));
}

double min_eigenvalue(const HermitianOperator &op) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(op.matrix(), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

bool is_physical_oracle(const HermitianOperator &op, double tol_psd) {
    return min_eigenvalue(op) >= -tol_psd;
}

bool is_entangled_ppt(const HermitianOperator &rho, double tol_psd) {
    require_two_qubits(rho, "is_entangled_ppt");
    if (!is_physical_oracle(rho, tol_psd)) {
        throw Error(ErrorCode::UnphysicalInput, "PPT test needs a positive operator");
    }
    return min_eigenvalue(partial_transpose(rho, Party::B)) < -tol_psd;
}

CMatrix psd_sqrt(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace steerlab
