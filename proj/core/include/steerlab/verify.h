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

#ifndef STEERLAB_VERIFY_H
#define STEERLAB_VERIFY_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steerlab/qstate.h"

namespace steerlab {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

enum class Suite { OracleEquivalence, Chirality, Bounds, Monogamy, Kkt };

inline constexpr Suite kAllSuites[] = {
    Suite::OracleEquivalence, Suite::Chirality, Suite::Bounds, Suite::Monogamy, Suite::Kkt,
};

std::string_view suite_name(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

struct VerifyConfig {
    std::uint64_t seed = kDefaultSeed;
    int samples = 10000;
    double tol_psd = kTolPsd;
};

struct SuiteResult {
    Suite suite = Suite::OracleEquivalence;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    /// Candidates inside the |g| <= 1e-8 band, excluded from the verdict.
    std::uint64_t band = 0;
    /// First few failure descriptions, in sample order.
    std::vector<std::string> messages;

    bool passed() const {
        return failures == 0;
    }
};

SuiteResult run_suite(Suite suite, const VerifyConfig &config);

/// Runs one named suite, or every suite for "all". Throws UnknownSuite.
std::vector<SuiteResult> run_suites(std::string_view name, const VerifyConfig &config);

/// One line per suite plus a total; byte-identical for identical inputs.
std::string format_summary(const std::vector<SuiteResult> &results);

}  // namespace steerlab

#endif
