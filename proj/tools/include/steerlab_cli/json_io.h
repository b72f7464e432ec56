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

#ifndef STEERLAB_CLI_JSON_IO_H
#define STEERLAB_CLI_JSON_IO_H

#include <string>
#include <variant>

#include "json.hpp"
#include "steerlab/classify.h"
#include "steerlab/concurrence.h"
#include "steerlab/ellipsoid.h"
#include "steerlab/kkt.h"
#include "steerlab/monogamy.h"
#include "steerlab/qstate.h"

namespace steerlab::cli {

using json = nlohmann::json;

using ParsedState = std::variant<HermitianOperator, ThreeQubitPure>;

/// Parses the dense4, pauli and pure8 state formats. Throws ParseError on
/// malformed documents; construction errors (BadTrace, NonHermitian, BadNorm)
/// pass through.
ParsedState parse_state(const json &doc);
ParsedState parse_state(const std::string &text);

json state_to_json(const HermitianOperator &rho);
json pauli_to_json(const PauliForm &pf);
json pure_to_json(const ThreeQubitPure &psi);
json ellipsoid_to_json(const Ellipsoid &e);
json report_to_json(const PhysicalityReport &report);
json concurrence_to_json(const VolumeBound &bound);
json monogamy_to_json(const MonogamyReport &report);

/// Serializes with every floating point number at 17 significant digits.
std::string dump(const json &doc, int indent = 2);

/// Formats one double at 17 significant digits.
std::string format_number(double x);

}  // namespace steerlab::cli

#endif
