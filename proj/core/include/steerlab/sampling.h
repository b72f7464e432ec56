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

#ifndef STEERLAB_SAMPLING_H
#define STEERLAB_SAMPLING_H

#include <cstdint>
#include <random>
#include <variant>

#include "steerlab/qstate.h"

namespace steerlab {

using Rng = std::mt19937_64;

/// Derives the seed of one parallel shard from a root seed (splitmix64), so
/// a sharded Monte Carlo run is reproducible from the root seed alone.
std::uint64_t shard_seed(std::uint64_t root, std::uint64_t shard);

enum class SampleKind { Mixed4, Pure4, Pure8 };

/// Normalized G G^dagger for a 4 x rank complex Gaussian G. Throws BadRank
/// unless 1 <= rank <= 4.
HermitianOperator random_mixed_state(Rng &rng, int rank = 4);
/// Haar-random two-qubit pure state as a projector.
HermitianOperator random_pure_two_qubit(Rng &rng);
ThreeQubitPure random_pure_three_qubit(Rng &rng);

using SampledState = std::variant<HermitianOperator, ThreeQubitPure>;

/// One sample from a fresh generator seeded with `seed`.
SampledState sample_state(std::uint64_t seed, SampleKind kind, int rank = 4);

/// Moves the lowest eigenvalue of a state to -delta before renormalizing the
/// trace, giving an unphysical candidate close to the positive cone.
HermitianOperator push_outside_psd(const HermitianOperator &rho, double delta);

}  // namespace steerlab

#endif
