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

#include "steerlab/error.h"

namespace steerlab {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitian:
            return "NonHermitian";
        case ErrorCode::BadTrace:
            return "BadTrace";
        case ErrorCode::BadPartition:
            return "BadPartition";
        case ErrorCode::UnphysicalInput:
            return "UnphysicalInput";
        case ErrorCode::BadRank:
            return "BadRank";
        case ErrorCode::SteererPure:
            return "SteererPure";
        case ErrorCode::SingularMarginal:
            return "SingularMarginal";
        case ErrorCode::NotCanonical:
            return "NotCanonical";
        case ErrorCode::BadRange:
            return "BadRange";
        case ErrorCode::BadWeights:
            return "BadWeights";
        case ErrorCode::BadNorm:
            return "BadNorm";
        case ErrorCode::Infeasible:
            return "Infeasible";
        case ErrorCode::DegenerateAxes:
            return "DegenerateAxes";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::BadGrid:
            return "BadGrid";
        case ErrorCode::UnknownSuite:
            return "UnknownSuite";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace steerlab
