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

#include "entcap/linalg.hpp"

namespace entcap {

/// Hermitian 4x4 operator on qubit A (x) qubit B, energy units.
class TwoQubitHamiltonian {
   public:
    explicit TwoQubitHamiltonian(ComplexMatrix matrix, const Tolerances &tol = default_tolerances());

    const ComplexMatrix &matrix() const {
        return matrix_;
    }

    TwoQubitHamiltonian scaled(double c) const;

   private:
    ComplexMatrix matrix_;
};

/// H = trace_part I + sum_i alpha_i s_i(x)I + sum_j beta_j I(x)s_j + sum_ij gamma_ij s_i(x)s_j
struct PauliCoefficients {
    RealVector3 alpha = RealVector3::Zero();
    RealVector3 beta = RealVector3::Zero();
    RealMatrix3 gamma = RealMatrix3::Zero();
    double trace_part = 0;
};

/// Local-unitary normal form of the interaction part:
///     (u_a (x) v_b)^dagger H_nonlocal (u_a (x) v_b)
///         = mu1 s1(x)s1 + det_sign * mu2 s2(x)s2 + mu3 s3(x)s3
struct CanonicalForm {
    RealVector3 mu = RealVector3::Zero();
    int det_sign = 1;
    ComplexMatrix u_a = ComplexMatrix::Identity(2, 2);
    ComplexMatrix v_b = ComplexMatrix::Identity(2, 2);

    /// The standard-form Hamiltonian in its own (canonical) frame.
    ComplexMatrix standard_form() const;
    /// u_a (x) v_b, mapping canonical-frame states to the lab frame.
    ComplexMatrix frame() const;
};

PauliCoefficients pauli_decompose(const TwoQubitHamiltonian &h);
ComplexMatrix pauli_reconstruct(const PauliCoefficients &c);
TwoQubitHamiltonian make_hamiltonian(const PauliCoefficients &c);

/// Interaction-only and local-only pieces of a coefficient record.
ComplexMatrix nonlocal_part(const PauliCoefficients &c);
ComplexMatrix local_part_a(const PauliCoefficients &c);  // 2x2, sum alpha_i s_i
ComplexMatrix local_part_b(const PauliCoefficients &c);  // 2x2, sum beta_j s_j

CanonicalForm canonical_form(const PauliCoefficients &c);
CanonicalForm canonical_form(const TwoQubitHamiltonian &h);

/// U with U^dagger s_i U = sum_k o(k, i) s_k. The overall sign is fixed by
/// making the largest-magnitude entry have nonnegative real part.
ComplexMatrix su2_from_so3(const RealMatrix3 &o, const Tolerances &tol = default_tolerances());

/// Inverse spectral width (e_max - e_min)^-1.
double timescale(const TwoQubitHamiltonian &h, const Tolerances &tol = default_tolerances());

namespace models {

TwoQubitHamiltonian ising();       // s3 (x) s3
TwoQubitHamiltonian heisenberg();  // sum_k s_k (x) s_k
TwoQubitHamiltonian xy();          // s1 (x) s1 + s2 (x) s2
TwoQubitHamiltonian from_couplings(double mu1, double mu2, double mu3);

}  // namespace models

}  // namespace entcap
