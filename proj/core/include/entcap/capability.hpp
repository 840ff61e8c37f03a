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

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entcap/hamiltonian.hpp"
#include "entcap/linalg.hpp"

namespace entcap {

/// Entanglement of a two-qubit pure state as a function of its smaller
/// Schmidt coefficient P in [0, 1/2].
struct EntanglementMeasure {
    std::string name;
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    /// Optional. When absent, optimal_p0 falls back to golden-section search.
    std::function<double(double)> second_derivative;
};

EntanglementMeasure entropy_measure();
/// E(P) = 2P. Only used to exercise the generic code paths.
EntanglementMeasure linear_measure();

double entropy_of_entanglement(double p);
/// -sum lambda log2 lambda over a Schmidt spectrum.
double entropy_of_spectrum(const std::vector<double> &lambdas);

/// f(P) = 2 sqrt(P(1-P)) E'(P), continued by 0 at P in {0, 1}.
double rate_factor_f(double p, const EntanglementMeasure &measure);
double rate_factor_f_derivative(double p, const EntanglementMeasure &measure);

/// (a, b) -> (-conj(b), conj(a)).
ComplexVector orthogonal_complement(const ComplexVector &qubit);

/// <phi, chi| H |phi_perp, chi_perp>.
Complex matrix_element_h(const TwoQubitHamiltonian &h, const ComplexVector &phi, const ComplexVector &chi);

double h_max(const CanonicalForm &cf);

double optimal_p0(const EntanglementMeasure &measure);

/// sqrt(P)|0,1> + i sqrt(1-P)|1,0> in the canonical frame (|0,0>, |1,1> for
/// det_sign = -1), mapped to the lab frame through cf.frame().
PureState optimal_state(const CanonicalForm &cf, double p);

/// <phi_small, chi_small| H |phi_large, chi_large> using the Schmidt vectors of
/// the state itself, so the relative Schmidt phase is already included.
Complex schmidt_matrix_element(const SchmidtDecomposition &sd, const ComplexMatrix &h);

struct FlaggedValue {
    double value = 0;
    /// Set when the Schmidt coefficients are degenerate (P = 1/2) and the
    /// derivative of the smaller coefficient is one-sided.
    bool degenerate = false;
};

FlaggedValue dp_dt(const PureState &state, const TwoQubitHamiltonian &h);
FlaggedValue rate_gamma(const PureState &state, const TwoQubitHamiltonian &h, const EntanglementMeasure &measure);

/// sin^2(h_max t + phi0).
double closed_form_p(double t, double h_max, double phi0);

/// (t, E) pairs along the optimal trajectory, truncated at the first point
/// where P reaches 1/2.
std::vector<std::pair<double, double>> e_max_curve(const std::vector<double> &t_grid, double h_max, double phi0,
                                                   const EntanglementMeasure &measure);

double invert_measure(double e, const EntanglementMeasure &measure);

struct DroppedLocalTerms {
    RealVector3 alpha = RealVector3::Zero();
    RealVector3 beta = RealVector3::Zero();
    double trace_part = 0;
};

struct CapabilityReport {
    double h_max = 0;
    double h_tilde_max = 0;
    double p0 = 0;
    double e_at_p0 = 0;
    double f_at_p0 = 0;
    double gamma_max = 0;
    std::optional<double> tau_h;  // empty when H is proportional to the identity
    RealVector3 mu = RealVector3::Zero();
    int det_sign = 1;
    DroppedLocalTerms dropped_local_terms;
};

CapabilityReport analyze_capability(const TwoQubitHamiltonian &h,
                                    const EntanglementMeasure &measure = entropy_measure());

}  // namespace entcap
