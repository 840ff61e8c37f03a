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
#include <optional>
#include <string>

#include <json.hpp>

#include "entcap/ancilla.hpp"
#include "entcap/capability.hpp"
#include "entcap/hamiltonian.hpp"
#include "entcap/hamsim.hpp"
#include "entcap/protocol.hpp"

namespace entcap::cli {

using json = nlohmann::ordered_json;

/// Malformed input file (missing, unparsable, wrong shape).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct HamiltonianInput {
    TwoQubitHamiltonian hamiltonian;
    std::string sha256;  // of the raw file bytes
    std::string units;
};

/// Accepts {"matrix": 4x4 of [re, im]} or {"pauli": {alpha, beta, gamma}},
/// plus an optional "units" string. Throws ParseError, or entcap::Error with
/// NonHermitianInput.
HamiltonianInput parse_hamiltonian(const std::string &text);
HamiltonianInput read_hamiltonian_file(const std::filesystem::path &path);

std::string sha256_hex(const std::string &bytes);
std::string tool_version();

/// Rounds to 12 significant digits; non-finite values become null.
json number(double x);
json number(const std::optional<double> &x);
/// Two-space indented JSON, floats as %.12g, arrays of scalars on one line.
std::string dump(const json &doc);

struct Provenance {
    std::string input_sha256;
    std::string tool_version;
    std::optional<std::uint64_t> seed;
};

struct AnalysisReport {
    Provenance provenance;
    CapabilityReport capability;
    AncillaReport ancilla;
};

json to_json(const AnalysisReport &report);
AnalysisReport analysis_report_from_json(const json &doc);

json schedule_to_json(const SimulationSchedule &schedule);
SimulationSchedule schedule_from_json(const json &doc);

std::string trace_to_csv(const ProtocolTrace &trace);
json trace_to_json(const ProtocolTrace &trace, const Provenance &provenance);

}  // namespace entcap::cli
