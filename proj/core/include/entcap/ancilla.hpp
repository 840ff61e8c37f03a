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

#include <array>
#include <optional>
#include <vector>

#include "entcap/capability.hpp"
#include "entcap/hamiltonian.hpp"
#include "entcap/linalg.hpp"

namespace entcap {

/// Each side is a qubit with one ancilla qubit, ordered qubit (x) ancilla, so a
/// local vector has 4 entries and the joint state 16.
struct MultilevelSchmidtState {
    std::vector<double> lambdas;  // descending, summing to 1
    ComplexMatrix phi_vectors;    // 4 x N, columns |phi_n>
    ComplexMatrix chi_vectors;    // 4 x N, columns |chi_n>

    PureState to_state() const;
    static MultilevelSchmidtState from_state(const PureState &state);
};

/// H (x) I on (qubit_A, ancilla_A, qubit_B, ancilla_B), i.e. the two-qubit
/// Hamiltonian acting on the qubit factors with the ancillas as spectators.
ComplexMatrix embed_qubit_hamiltonian(const ComplexMatrix &h);

/// 2 sum_m sqrt(lambda_n lambda_m) Im <phi_n, chi_n| H |phi_m, chi_m>.
double lambda_dot(const MultilevelSchmidtState &state, const ComplexMatrix &h_total, int n);

/// sum_n dE/dlambda_n * dlambda_n/dt for the entropy of entanglement. Terms with
/// lambda_n = 0 take their limit value 0 and set the degenerate flag.
FlaggedValue multilevel_rate(const MultilevelSchmidtState &state, const ComplexMatrix &h_total);

/// 2 sqrt(P(1-P)/3) log2[(1-P)/(3P)].
double f_tilde(double p);
double f_tilde_derivative(double p);
/// Entropy of the spectrum (P, (1-P)/3, (1-P)/3, (1-P)/3).
double equal_tail_entropy(double p);
/// P in [1/4, 1] with equal_tail_entropy(P) = e.
double equal_tail_p_for_entropy(double e);

/// Argmax of |f_tilde| on (0, 1).
double optimal_p_tilde();

double h_tilde_max(const CanonicalForm &cf);

/// Global phases applied to the four Bell states, in units of pi/4.
using BellPhasePattern = std::array<int, 4>;

/// Phase pattern for which sum_n Im <phi_1,chi_1|H|phi_n,chi_n> equals
/// sign * (mu1 + mu2 + mu3) for every standard form with the given det_sign.
BellPhasePattern bell_phase_pattern(int det_sign, int sign);

/// Bell-basis configuration in the canonical frame, lambdas (p, q, q, q) with
/// q = (1 - p)/3 and phases chosen so the restricted rate is positive.
MultilevelSchmidtState bell_configuration(double p, int det_sign);
/// Same configuration carried to the lab frame of cf.
MultilevelSchmidtState bell_configuration(const CanonicalForm &cf, double p);

struct AncillaComparison {
    std::optional<double> gamma_e;  // absent when e > 1 (beyond two-qubit range)
    double gamma_tilde_e = 0;
    bool ancilla_wins = false;
    std::optional<double> crossover_e;
};

AncillaComparison compare_with_without_ancilla(const CanonicalForm &cf, double e);

/// Smallest e in (0, 1] from which the ancilla-assisted rate is at least the
/// ancilla-free one.
std::optional<double> ancilla_crossover(const CanonicalForm &cf);

struct AncillaReport {
    double h_tilde_max = 0;
    double p_tilde0 = 0;
    double f_tilde_at_p0 = 0;  // |f_tilde(P~0)|
    double e_at_p_tilde0 = 0;
    double gamma_tilde_max = 0;
    std::optional<double> ratio_vs_no_ancilla;
    std::optional<double> crossover_e;
};

AncillaReport analyze_ancilla(const CanonicalForm &cf);

}  // namespace entcap
