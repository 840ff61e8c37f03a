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

#include <vector>

#include "entcap/hamiltonian.hpp"
#include "entcap/linalg.hpp"

namespace entcap {

/// A pair of single-qubit unitaries applied simultaneously on A and B.
struct LocalPair {
    ComplexMatrix a = ComplexMatrix::Identity(2, 2);
    ComplexMatrix b = ComplexMatrix::Identity(2, 2);

    ComplexMatrix joint() const {
        return kron(a, b);
    }
};

/// post_local * exp(-i H_source duration) * pre_local
struct PulseStep {
    LocalPair pre_local;
    double duration = 0;
    LocalPair post_local;
};

enum class AlphaRatio {
    HMax,       // alpha = h_max / h'_max
    HTildeMax,  // alpha = h~_max / h~'_max
};

/// How the source's standard-form coupling mu1 s1(x)s1 is isolated.
enum class Decoupling {
    /// H, then s1 on A around a second application of H. Only exact to first
    /// order when the source has no single-qubit terms.
    PauliSandwich,
    /// Average over the 8-element local Pauli group generated by s1 on A,
    /// s1 on B and s3(x)s3. Also cancels single-qubit terms of the source.
    Full,
};

struct SimulationSchedule {
    std::vector<PulseStep> steps;
    double target_time = 0;
    double native_time = 0;  // sum of step durations
    double alpha = 0;        // may be +inf for a non-entangling target
    double time_bound = 0;   // 3 t / alpha
};

std::vector<LocalPair> decoupling_group(Decoupling mode);

/// Fragment whose composition approximates exp(-i mu1 s_k(x)s_k tau) in the
/// lab frame, built from the source Hamiltonian with canonical form cf. The
/// native interaction time equals tau.
SimulationSchedule synthesize_component(const CanonicalForm &cf, int k, double tau, double dt,
                                        Decoupling mode = Decoupling::Full);

/// Trotterized simulation of the target's interaction part for time t.
SimulationSchedule build_schedule(const CanonicalForm &source, const CanonicalForm &target, double t, double dt,
                                  AlphaRatio ratio = AlphaRatio::HMax, Decoupling mode = Decoupling::Full);

/// Same, but the target's single-qubit terms are also reproduced by
/// zero-duration local steps. The target's trace part only contributes a
/// global phase and is ignored.
SimulationSchedule build_schedule(const CanonicalForm &source, const TwoQubitHamiltonian &target, double t,
                                  double dt, AlphaRatio ratio = AlphaRatio::HMax,
                                  Decoupling mode = Decoupling::Full);

/// 1% of the faster of the two capability time scales.
double default_dt(const CanonicalForm &source, const CanonicalForm &target);

ComplexMatrix execute_schedule(const SimulationSchedule &schedule, const TwoQubitHamiltonian &source);

/// || u - e^{i theta} exp(-i H t) || with theta = arg Tr(exp(-i H t)^dagger u).
double simulation_error(const ComplexMatrix &u_achieved, const ComplexMatrix &h_target, double t);

}  // namespace entcap
