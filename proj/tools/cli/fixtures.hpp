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

#include <string>
#include <vector>

#include "entcap/hamiltonian.hpp"
#include "entcap/oracle.hpp"

namespace entcap::cli {

/// One analytic-versus-oracle comparison.
struct VerifyRow {
    std::string quantity;
    double analytic = 0;
    double oracle = 0;
    double residual = 0;
    double tolerance = 0;

    bool pass() const {
        return residual <= tolerance;
    }
};

/// Runs the oracle suite on h. corrupt_analytic is added to the analytic
/// h_max before comparison (negative testing of the verify command).
std::vector<VerifyRow> verify_rows(const TwoQubitHamiltonian &h, const SearchConfig &cfg,
                                   double corrupt_analytic = 0);

std::string verify_table_csv(const std::vector<VerifyRow> &rows);

struct NamedHamiltonian {
    std::string name;
    TwoQubitHamiltonian hamiltonian;
};

/// Fixed set used for the recorded fixtures: standard models, a canonical
/// Hamiltonian with negative determinant and seeded random Hamiltonians
/// scaled to h_max = 1.
std::vector<NamedHamiltonian> fixture_hamiltonians();

SearchConfig fixture_search_config();

/// Whitespace-separated table: name quantity analytic oracle residual.
std::string oracle_fixtures_table();

}  // namespace entcap::cli
