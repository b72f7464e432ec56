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

#ifndef STEERLAB_CLI_COMMANDS_H
#define STEERLAB_CLI_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steerlab/qstate.h"
#include "steerlab/verify.h"

namespace steerlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

struct Grid {
    double start = 0.0;
    double stop = 1.0;
    double step = 0.1;

    std::vector<double> points() const;
};

/// Parses "start:stop:step". Throws BadGrid.
Grid parse_grid(const std::string &spec);

struct RunConfig {
    std::string command;
    std::string in;
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    int samples = 10000;
    std::string grid = "0:1:0.01";
    std::string kind;
    std::string suite = "all";
    std::string family;
    std::optional<double> p;
    std::optional<double> r;
    std::optional<double> eps;
    std::optional<double> c;
    std::string b;
    std::string axis = "auto";
    std::string format = "json";
    std::optional<double> w_centre;
    std::string boost;
    int chi = -1;
    int dim = 3;
    double tol_psd = kTolPsd;
};

/// Default seed, or STEERLAB_SEED when set.
std::uint64_t default_seed();

int cmd_analyze(const RunConfig &config, std::ostream &out);
int cmd_family(const RunConfig &config, std::ostream &out);
int cmd_boundary(const RunConfig &config, std::ostream &out);
int cmd_verify(const RunConfig &config, std::ostream &out);
int cmd_monogamy(const RunConfig &config, std::ostream &out);
int cmd_kkt(const RunConfig &config, std::ostream &out);

/// Full command line entry point; returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace steerlab::cli

#endif
