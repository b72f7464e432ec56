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

#include <gtest/gtest.h>

#include <set>

#include "oracles.h"
#include "steerlab/error.h"

namespace steerlab {
namespace {

TEST(Sampling, SameSeedSameState) {
    for (SampleKind kind : {SampleKind::Mixed4, SampleKind::Pure4, SampleKind::Pure8}) {
        SampledState a = sample_state(1234, kind);
        SampledState b = sample_state(1234, kind);
        if (kind == SampleKind::Pure8) {
            EXPECT_EQ(std::get<ThreeQubitPure>(a).amplitudes(), std::get<ThreeQubitPure>(b).amplitudes());
        } else {
            EXPECT_EQ(std::get<HermitianOperator>(a).matrix(), std::get<HermitianOperator>(b).matrix());
        }
    }
}

TEST(Sampling, MixedStatesArePhysical) {
    Rng rng(42);
    for (int i = 0; i < 10000; ++i) {
        HermitianOperator rho = random_mixed_state(rng, 1 + i % 4);
        ASSERT_GE(oracle::min_eig(rho.matrix()), -1e-12);
        ASSERT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
    }
}

TEST(Sampling, RankIsRespected) {
    Rng rng(1);
    for (int rank = 1; rank <= 4; ++rank) {
        HermitianOperator rho = random_mixed_state(rng, rank);
        Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
        int positive = 0;
        for (int i = 0; i < 4; ++i) {
            positive += es.eigenvalues()(i) > 1e-12;
        }
        EXPECT_EQ(positive, rank);
    }
    EXPECT_THROW(random_mixed_state(rng, 0), Error);
    EXPECT_THROW(random_mixed_state(rng, 5), Error);
}

TEST(Sampling, PureStatesAreNormalized) {
    Rng rng(2);
    for (int i = 0; i < 10000; ++i) {
        ThreeQubitPure psi = random_pure_three_qubit(rng);
        ASSERT_NEAR(psi.amplitudes().norm(), 1.0, 1e-12);
    }
    HermitianOperator p = random_pure_two_qubit(rng);
    EXPECT_NEAR((p.matrix() * p.matrix()).trace().real(), 1.0, 1e-12);
}

TEST(Sampling, ShardSeedsAreDistinct) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        seen.insert(shard_seed(99, i));
    }
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_NE(shard_seed(1, 0), shard_seed(2, 0));
}

TEST(Sampling, PushOutsidePsd) {
    Rng rng(5);
    for (double delta : {1e-1, 1e-3, 1e-6}) {
        HermitianOperator rho = push_outside_psd(random_mixed_state(rng), delta);
        EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-14);
        double m = oracle::min_eig(rho.matrix());
        EXPECT_LT(m, 0.0);
        EXPECT_GT(m, -2.0 * delta);
    }
}

}  // namespace
}  // namespace steerlab
