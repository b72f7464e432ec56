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

#include "steerlab/sampling.h"

#include "steerlab/error.h"

namespace steerlab {

namespace {

CMatrix complex_gaussian(Rng &rng, int rows, int cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix g(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            double re = normal(rng);
            double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

}  // namespace

std::uint64_t shard_seed(std::uint64_t root, std::uint64_t shard) {
    std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (shard + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

HermitianOperator random_mixed_state(Rng &rng, int rank) {
    if (rank < 1 || rank > 4) {
        throw Error(ErrorCode::BadRank, "rank must be in [1, 4]");
    }
    CMatrix g = complex_gaussian(rng, 4, rank);
    CMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return HermitianOperator(m);
}

HermitianOperator random_pure_two_qubit(Rng &rng) {
    CMatrix v = complex_gaussian(rng, 4, 1);
    v /= v.norm();
    return HermitianOperator(v * v.adjoint());
}

ThreeQubitPure random_pure_three_qubit(Rng &rng) {
    CMatrix v = complex_gaussian(rng, 8, 1);
    v /= v.norm();
    return ThreeQubitPure(ThreeQubitPure::Amplitudes(v));
}

SampledState sample_state(std::uint64_t seed, SampleKind kind, int rank) {
    Rng rng(seed);
    switch (kind) {
        case SampleKind::Mixed4:
            return random_mixed_state(rng, rank);
        case SampleKind::Pure4:
            return random_pure_two_qubit(rng);
        case SampleKind::Pure8:
            return random_pure_three_qubit(rng);
    }
    throw Error(ErrorCode::BadRank, "unknown sample kind");
}

HermitianOperator push_outside_psd(const HermitianOperator &rho, double delta) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
    Eigen::VectorXd lam = es.eigenvalues();
    lam(0) = -delta;
    CMatrix m = es.eigenvectors() * lam.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    m /= m.trace().real();
    return HermitianOperator(0.5 * (m + m.adjoint()));
}

}  // namespace steerlab
