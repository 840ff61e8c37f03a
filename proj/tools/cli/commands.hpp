// Copyright 2026 The entcap Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace entcap::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kParseError = 2,
    kInvalidHamiltonian = 3,
    kInvalidProtocol = 4,
    kZeroCoupling = 5,
};

struct AnalyzeOptions {
    std::filesystem::path input;
    std::string format = "json";
    std::optional<std::uint64_t> seed;
};

struct ProtocolOptions {
    std::filesystem::path input;
    double dt = 1e-3;
    std::optional<double> t_end;
    std::optional<double> initial_p;
    std::string mode = "two-qubit";
    std::string format = "csv";
};

struct SimulateOptions {
    std::filesystem::path source;
    std::filesystem::path target;
    double t = 1;
    std::optional<double> dt;
    std::optional<std::filesystem::path> dump_schedule;
    std::string format = "json";
};

struct VerifyOptions {
    std::filesystem::path input;
    std::uint64_t seed = 20260101;
    int restarts = 64;
    std::string format = "csv";
    double corrupt_analytic = 0;
};

/// Each command returns the document to print; failures throw.
std::string cmd_analyze(const AnalyzeOptions &opts);
std::string cmd_protocol(const ProtocolOptions &opts);
std::string cmd_simulate(const SimulateOptions &opts);
/// Sets passed to false when any residual exceeds its tolerance.
std::string cmd_verify(const VerifyOptions &opts, bool &passed);

/// Parses argv, dispatches, writes to --out or out, maps failures to exit
/// codes with a message on err.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace entcap::cli
