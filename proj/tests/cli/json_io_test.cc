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

#include "steerlab_cli/json_io.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "steerlab/error.h"
#include "steerlab/families.h"
#include "steerlab/monogamy.h"
#include "steerlab/sampling.h"

namespace steerlab::cli {
namespace {

ErrorCode code_of(const std::string &text) {
    try {
        parse_state(text);
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for " << text;
    return ErrorCode::ParseError;
}

TEST(FormatNumber, SeventeenDigits) {
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(-2.5), "-2.5");
    EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "null");
    EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Dump, UsesFullPrecisionAndFlatArrays) {
    json doc = {{"x", 0.1}, {"v", {1.0, 2.0, 3.0}}};
    std::string s = dump(doc);
    EXPECT_NE(s.find("0.10000000000000001"), std::string::npos);
    EXPECT_NE(s.find("[1, 2, 3]"), std::string::npos) << s;
    EXPECT_EQ(json::parse(s)["x"].get<double>(), 0.1);
    EXPECT_EQ(dump(json::object(), 0), "{}");
}

TEST(ParseState, DenseRoundTrip) {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        HermitianOperator rho = random_mixed_state(rng);
        ParsedState back = parse_state(dump(state_to_json(rho)));
        ASSERT_TRUE(std::holds_alternative<HermitianOperator>(back));
        EXPECT_EQ((std::get<HermitianOperator>(back).matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 0.0);
    }
}

TEST(ParseState, PauliRoundTrip) {
    Rng rng(32);
    for (int i = 0; i < 200; ++i) {
        HermitianOperator rho = random_mixed_state(rng);
        ParsedState back = parse_state(dump(pauli_to_json(pauli_decompose(rho))));
        ASSERT_TRUE(std::holds_alternative<HermitianOperator>(back));
        EXPECT_LT((std::get<HermitianOperator>(back).matrix() - rho.matrix()).norm(), 1e-15);
    }
}

TEST(ParseState, PureRoundTrip) {
    Rng rng(33);
    for (int i = 0; i < 200; ++i) {
        ThreeQubitPure psi = random_pure_three_qubit(rng);
        ParsedState back = parse_state(dump(pure_to_json(psi)));
        ASSERT_TRUE(std::holds_alternative<ThreeQubitPure>(back));
        EXPECT_EQ((std::get<ThreeQubitPure>(back).amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff(), 0.0);
    }
}

TEST(ParseState, Errors) {
    EXPECT_EQ(code_of("not json"), ErrorCode::ParseError);
    EXPECT_EQ(code_of("[1, 2]"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"kind": "sparse"})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"kind": 4})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"kind": "dense4", "matrix": [[1]]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"kind": "pauli", "a": [0, 0], "b": [0, 0, 0], "T": [[0,0,0],[0,0,0],[0,0,0]]})"),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"kind": "pure8", "amplitudes": [[1, 0]]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"kind": "pure8", "amplitudes": [[1,0],[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})"),
              ErrorCode::BadNorm);
    json bad = state_to_json(werner(0.2));
    bad["matrix"][0][0] = json::array({0.3, 0.0});
    EXPECT_EQ(code_of(bad.dump()), ErrorCode::BadTrace);
    bad = state_to_json(werner(0.2));
    bad["matrix"][0][1] = json::array({0.1, 0.0});
    EXPECT_EQ(code_of(bad.dump()), ErrorCode::NonHermitian);
}

TEST(Serializers, Fields) {
    Ellipsoid e = steering_ellipsoid(pauli_decompose(werner(0.5)), Party::A);
    json j = ellipsoid_to_json(e);
    EXPECT_EQ(j["chirality"], -1);
    EXPECT_NEAR(j["volume"].get<double>(), e.volume(), 0.0);
    EXPECT_EQ(j["semiaxes"].size(), 3u);

    json r = report_to_json(classify_state(werner(0.5)));
    EXPECT_EQ(r["entangled"], true);
    EXPECT_TRUE(r.contains("g1"));
    EXPECT_TRUE(r.contains("boundary"));

    PauliForm pf;
    pf.T = Vec3(1, 1, 1).asDiagonal();
    json unphysical = report_to_json(classify_state(pauli_compose(pf)));
    EXPECT_TRUE(unphysical["entangled"].is_null());
    EXPECT_EQ(unphysical["physical"], false);

    json m = monogamy_to_json(monogamy_report(w_family(0.5)));
    for (const char *key : {"volumes", "centres", "gamma", "concurrence", "tangle", "scenario_a", "scenario_b",
                            "volume_centre", "centre_sum", "ckw", "obesity", "near_singular"}) {
        EXPECT_TRUE(m.contains(key)) << key;
    }
}

}  // namespace
}  // namespace steerlab::cli
