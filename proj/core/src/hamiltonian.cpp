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

#include "entcap/hamiltonian.hpp"

#include <cmath>

#include "entcap/errors.hpp"

namespace entcap {

TwoQubitHamiltonian::TwoQubitHamiltonian(ComplexMatrix matrix, const Tolerances &tol) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != 4 || matrix_.cols() != 4) {
        throw Error(ErrorCode::InvalidArgument, "two-qubit Hamiltonian must be 4x4");
    }
    require_hermitian(matrix_, tol);
}

TwoQubitHamiltonian TwoQubitHamiltonian::scaled(double c) const {
    return TwoQubitHamiltonian(c * matrix_);
}

ComplexMatrix CanonicalForm::standard_form() const {
    ComplexMatrix h = ComplexMatrix::Zero(4, 4);
    const double signs[3] = {1.0, static_cast<double>(det_sign), 1.0};
    for (int k = 0; k < 3; k++) {
        h += signs[k] * mu(k) * kron(pauli(k + 1), pauli(k + 1));
    }
    return h;
}

ComplexMatrix CanonicalForm::frame() const {
    return kron(u_a, v_b);
}

PauliCoefficients pauli_decompose(const TwoQubitHamiltonian &h) {
    const ComplexMatrix &m = h.matrix();
    auto coeff = [&](int i, int j) { return (m * kron(pauli(i), pauli(j))).trace().real() / 4.0; };
    PauliCoefficients c;
    c.trace_part = coeff(0, 0);
    for (int i = 0; i < 3; i++) {
        c.alpha(i) = coeff(i + 1, 0);
        c.beta(i) = coeff(0, i + 1);
        for (int j = 0; j < 3; j++) {
            c.gamma(i, j) = coeff(i + 1, j + 1);
        }
    }
    return c;
}

ComplexMatrix nonlocal_part(const PauliCoefficients &c) {
    ComplexMatrix h = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            h += c.gamma(i, j) * kron(pauli(i + 1), pauli(j + 1));
        }
    }
    return h;
}

ComplexMatrix local_part_a(const PauliCoefficients &c) {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 3; i++) {
        h += c.alpha(i) * pauli(i + 1);
    }
    return h;
}

ComplexMatrix local_part_b(const PauliCoefficients &c) {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 3; i++) {
        h += c.beta(i) * pauli(i + 1);
    }
    return h;
}

ComplexMatrix pauli_reconstruct(const PauliCoefficients &c) {
    return c.trace_part * identity(4) + kron(local_part_a(c), identity(2)) + kron(identity(2), local_part_b(c)) +
           nonlocal_part(c);
}

TwoQubitHamiltonian make_hamiltonian(const PauliCoefficients &c) {
    return TwoQubitHamiltonian(pauli_reconstruct(c));
}

CanonicalForm canonical_form(const PauliCoefficients &c) {
    SpecialSvd3 svd = svd3_special(c.gamma);
    CanonicalForm cf;
    cf.mu = svd.sigma;
    cf.det_sign = svd.det_sign;
    // svd gives o_a^T gamma o_b^T = diag(s1, s2, third_sign * s3). For a
    // negative determinant, a pi rotation about axis 1 on B moves the sign
    // from the third coupling onto the second.
    RealMatrix3 o_b = svd.o_b;
    if (svd.det_sign < 0) {
        o_b = RealVector3(1, -1, -1).asDiagonal() * o_b;
    }
    cf.u_a = su2_from_so3(svd.o_a.transpose());
    cf.v_b = su2_from_so3(o_b);
    return cf;
}

CanonicalForm canonical_form(const TwoQubitHamiltonian &h) {
    return canonical_form(pauli_decompose(h));
}

ComplexMatrix su2_from_so3(const RealMatrix3 &o, const Tolerances &tol) {
    double orth = (o.transpose() * o - RealMatrix3::Identity()).cwiseAbs().maxCoeff();
    if (orth > tol.special_orthogonal || std::abs(o.determinant() - 1.0) > tol.special_orthogonal) {
        throw Error(ErrorCode::NotSpecialOrthogonal, "su2_from_so3: input is not a proper rotation");
    }

    // Unit quaternion (w, x, y, z) of the rotation.
    double w, x, y, z;
    double tr = o.trace();
    if (tr > 0) {
        double s = 2 * std::sqrt(tr + 1);
        w = s / 4;
        x = (o(2, 1) - o(1, 2)) / s;
        y = (o(0, 2) - o(2, 0)) / s;
        z = (o(1, 0) - o(0, 1)) / s;
    } else if (o(0, 0) > o(1, 1) && o(0, 0) > o(2, 2)) {
        double s = 2 * std::sqrt(1 + o(0, 0) - o(1, 1) - o(2, 2));
        w = (o(2, 1) - o(1, 2)) / s;
        x = s / 4;
        y = (o(0, 1) + o(1, 0)) / s;
        z = (o(0, 2) + o(2, 0)) / s;
    } else if (o(1, 1) > o(2, 2)) {
        double s = 2 * std::sqrt(1 + o(1, 1) - o(0, 0) - o(2, 2));
        w = (o(0, 2) - o(2, 0)) / s;
        x = (o(0, 1) + o(1, 0)) / s;
        y = s / 4;
        z = (o(1, 2) + o(2, 1)) / s;
    } else {
        double s = 2 * std::sqrt(1 + o(2, 2) - o(0, 0) - o(1, 1));
        w = (o(1, 0) - o(0, 1)) / s;
        x = (o(0, 2) + o(2, 0)) / s;
        y = (o(1, 2) + o(2, 1)) / s;
        z = s / 4;
    }

    // W = exp(-i theta n.s / 2) satisfies W s_i W^dagger = sum_k o(k, i) s_k,
    // so the requested U is its adjoint.
    const Complex i(0, 1);
    ComplexMatrix u = w * pauli(0) + i * (x * pauli(1) + y * pauli(2) + z * pauli(3));

    int best = 0;
    double best_mag = -1;
    for (int k = 0; k < 4; k++) {
        double mag = std::abs(u(k / 2, k % 2));
        if (mag > best_mag + 1e-12) {
            best_mag = mag;
            best = k;
        }
    }
    Complex pivot = u(best / 2, best % 2);
    if (pivot.real() < -1e-12 || (std::abs(pivot.real()) <= 1e-12 && pivot.imag() < 0)) {
        u = -u;
    }
    return u;
}

double timescale(const TwoQubitHamiltonian &h, const Tolerances &tol) {
    Eigensystem es = hermitian_eigensystem(h.matrix(), tol);
    double e_min = es.values(0);
    double e_max = es.values(es.values.size() - 1);
    if (e_max - e_min <= tol.degenerate_spectrum * std::max(1.0, std::abs(e_max))) {
        throw Error(ErrorCode::DegenerateSpectrum, "timescale: Hamiltonian is proportional to the identity");
    }
    return 1.0 / (e_max - e_min);
}

namespace models {

TwoQubitHamiltonian from_couplings(double mu1, double mu2, double mu3) {
    PauliCoefficients c;
    c.gamma = RealVector3(mu1, mu2, mu3).asDiagonal();
    return make_hamiltonian(c);
}

TwoQubitHamiltonian ising() {
    return from_couplings(0, 0, 1);
}

TwoQubitHamiltonian heisenberg() {
    return from_couplings(1, 1, 1);
}

TwoQubitHamiltonian xy() {
    return from_couplings(1, 1, 0);
}

}  // namespace models

}  // namespace entcap
