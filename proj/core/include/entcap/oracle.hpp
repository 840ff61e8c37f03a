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

#include "entcap/capability.hpp"
#include "entcap/hamiltonian.hpp"
#include "entcap/linalg.hpp"

namespace entcap {

/// Brute-force searches used to check the analytic results independently.
/// Every search is sequential and seeded, so results are bit-reproducible.
struct SearchConfig {
    int grid_resolution = 24;
    int restarts = 64;
    int refine_iters = 200;
    std::uint64_t seed = 20260101;
    double fd_epsilon = 1e-6;
};

void validate_search_config(const SearchConfig &cfg);

struct HMaxSearch {
    double value = 0;
    ComplexVector phi;  // maximizing qubit states
    ComplexVector chi;
};

/// Maximizes |<phi,chi|H|phi_perp,chi_perp>| over Bloch angles.
HMaxSearch brute_force_h_max(const TwoQubitHamiltonian &h, const SearchConfig &cfg = {});

struct HTildeSearch {
    double bell_family = 0;  // best over locally twirled Bell bases
    double general = 0;      // best over random orthonormal 4-level bases
    double value() const {
        return bell_family > general ? bell_family : general;
    }
};

/// Maximizes sum_{n>=2} |<phi_1,chi_1|H|phi_n,chi_n>| over orthonormal bases
/// of qubit (x) ancilla on each side.
HTildeSearch brute_force_h_tilde(const TwoQubitHamiltonian &h, const SearchConfig &cfg = {});

struct FiniteDifference {
    double dp_dt_fd = 0;
    double dp_dt_analytic = 0;
    double residual = 0;
};

FiniteDifference finite_difference_check(const PureState &state, const TwoQubitHamiltonian &h, double eps);

struct RateSearch {
    double rate = 0;
    double p = 0;
    ComplexMatrix u_a = ComplexMatrix::Identity(2, 2);
    ComplexMatrix v_b = ComplexMatrix::Identity(2, 2);

    /// (u_a (x) v_b)(sqrt(p)|00> + sqrt(1-p)|11>)
    PureState state() const;
};

/// Entanglement rate of (u (x) v)(sqrt(p)|00> + sqrt(1-p)|11>), computed
/// from first-order perturbation theory on the smaller Schmidt weight.
double rate_in_frame(const TwoQubitHamiltonian &h, double p, const ComplexMatrix &u, const ComplexMatrix &v,
                     const EntanglementMeasure &measure);

/// Best rate over local-unitary orbits at fixed entanglement e.
RateSearch brute_force_rate_at_e(const TwoQubitHamiltonian &h, double e, const EntanglementMeasure &measure,
                                 const SearchConfig &cfg = {});

/// Local-unitary-invariant summary of a two-qubit state relative to the
/// canonical frame of H: with smaller-weight Schmidt vectors (phi_s, chi_s)
/// pulled back into the canonical frame, |z| of phi_s, z(phi_s) * z(chi_s),
/// and g = <phi_s chi_s|H|phi_l chi_l> / h_max split into real and imaginary
/// parts.
struct CanonicalDescriptor {
    double abs_z_phi = 0;
    double z_product = 0;
    double re_g = 0;
    double im_g = 0;
};

CanonicalDescriptor canonical_descriptor(const PureState &state, const TwoQubitHamiltonian &h);

double descriptor_distance(const CanonicalDescriptor &a, const CanonicalDescriptor &b);

/// Haar-like random Hermitian 4x4 with entries of order one.
ComplexMatrix random_hermitian(std::uint64_t seed, int dim = 4);

}  // namespace entcap
