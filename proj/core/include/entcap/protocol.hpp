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

#include <iosfwd>
#include <string>
#include <vector>

#include "entcap/capability.hpp"
#include "entcap/hamiltonian.hpp"

namespace entcap {

enum class ProtocolMode { TwoQubit, Ancilla };

struct ProtocolConfig {
    double dt = 1e-3;
    double t_end = 1.0;
    /// Starting Schmidt coefficient. Two-qubit mode: P in [0, 1/2].
    /// Ancilla mode: the largest coefficient lambda_1 in (0, 1).
    double initial_p = 0.0;
    ProtocolMode mode = ProtocolMode::TwoQubit;
    EntanglementMeasure measure = entropy_measure();
};

/// Throws StepTooLarge when dt exceeds 1% of tau_H and InvalidArgument for
/// any other violated constraint.
void validate_protocol_config(const TwoQubitHamiltonian &h, const ProtocolConfig &cfg);

struct ProtocolRecord {
    double t = 0;
    double p = 0;
    double e = 0;
    double gamma = 0;
    double deviation = 0;  // |p - closed-form p(t)|
};

struct ProtocolTrace {
    std::vector<ProtocolRecord> records;
    int total_steps = 0;
    /// Ancilla mode: spread max - min of lambda_2..lambda_4 after each
    /// evolution step, before the equal-tail configuration is re-imposed.
    std::vector<double> tail_drift;
    /// Largest change of the Schmidt spectrum caused by any restoration.
    double max_restoration_change = 0;
    /// Largest | ||psi|| - 1 | seen along the run.
    double max_norm_defect = 0;
};

struct Restoration {
    PureState state;
    ComplexMatrix u_a;
    ComplexMatrix v_b;
};

/// Local unitaries (u_a, v_b) taking state to optimal_state(cf, P(state)).
Restoration restore_optimal(const PureState &state, const CanonicalForm &cf);

ProtocolTrace run_optimal_protocol(const TwoQubitHamiltonian &h, const ProtocolConfig &cfg);
ProtocolTrace run_ancilla_protocol(const TwoQubitHamiltonian &h, const ProtocolConfig &cfg);
/// Dispatches on cfg.mode.
ProtocolTrace run_protocol(const TwoQubitHamiltonian &h, const ProtocolConfig &cfg);

/// min(P, 1 - P) for P = sin^2(h_max t + phi0): the smaller Schmidt weight
/// along the optimal curve, also after it passes 1/2.
double smaller_weight_reference(double t, double h_max, double phi0);

/// Closed-form lambda_1(t) for the equal-tail Bell configuration:
/// sin^2(x0 - h_tilde_max t / sqrt(3)) with sin^2(x0) = lambda_1(0).
double equal_tail_closed_form_p(double t, double h_tilde_max, double x0);

/// max_k |p_k - smaller_weight_reference(t_k, h_max, phi0)|.
double verify_trace(const ProtocolTrace &trace, double h_max, double phi0 = 0.0);

/// Twelve significant digits in positional notation, independent of locale.
std::string plain_decimal(double x);

/// CSV with header t,P,E,gamma,deviation, numbers as plain_decimal.
void write_trace_csv(std::ostream &out, const ProtocolTrace &trace);

}  // namespace entcap
