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

#include <gtest/gtest.h>

#include <numbers>

#include "entcap/errors.hpp"
#include "entcap/hamiltonian.hpp"
#include "test_support.hpp"

using namespace entcap;

namespace {

RealMatrix3 rotation_z(double theta) {
    RealMatrix3 r;
    r << std::cos(theta), -std::sin(theta), 0, std::sin(theta), std::cos(theta), 0, 0, 0, 1;
    return r;
}

// O_{ki} from U^dag s_i U = sum_k O_{ki} s_k, read back with traces.
RealMatrix3 conjugation_matrix(const ComplexMatrix &u) {
    RealMatrix3 o;
    for (int i = 1; i <= 3; i++) {
        ComplexMatrix c = u.adjoint() * pauli(i) * u;
        for (int k = 1; k <= 3; k++) {
            o(k - 1, i - 1) = (pauli(k) * c).trace().real() / 2;
        }
    }
    return o;
}

ComplexMatrix standard_form(const RealVector3 &mu, int det_sign) {
    return mu(0) * kron(pauli(1), pauli(1)) + det_sign * mu(1) * kron(pauli(2), pauli(2)) +
           mu(2) * kron(pauli(3), pauli(3));
}

}  // namespace

TEST(TwoQubitHamiltonianTest, RejectsBadInput) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 1) = 1;
    try {
        TwoQubitHamiltonian h(m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonHermitianInput);
    }
    EXPECT_THROW(TwoQubitHamiltonian(identity(2)), Error);
}

TEST(PauliDecompose, ZZ) {
    PauliCoefficients c = pauli_decompose(models::ising());
    RealMatrix3 expected = RealMatrix3::Zero();
    expected(2, 2) = 1;
    EXPECT_LT((c.gamma - expected).norm(), 1e-15);
    EXPECT_LT(c.alpha.norm(), 1e-15);
    EXPECT_LT(c.beta.norm(), 1e-15);
    EXPECT_NEAR(c.trace_part, 0, 1e-15);
}

TEST(PauliDecompose, LocalXOnA) {
    PauliCoefficients c = pauli_decompose(TwoQubitHamiltonian(kron(pauli(1), identity(2))));
    EXPECT_LT((c.alpha - RealVector3(1, 0, 0)).norm(), 1e-15);
    EXPECT_LT(c.beta.norm(), 1e-15);
    EXPECT_LT(c.gamma.norm(), 1e-15);
}

TEST(PauliDecompose, HeisenbergWithShift) {
    TwoQubitHamiltonian h(models::heisenberg().matrix() + 2.0 * identity(4));
    PauliCoefficients c = pauli_decompose(h);
    EXPECT_LT((c.gamma - RealMatrix3::Identity()).norm(), 1e-15);
    EXPECT_NEAR(c.trace_part, 2, 1e-15);
}

TEST(PauliDecompose, RandomReconstruction) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; trial++) {
        TwoQubitHamiltonian h(testutil::random_hermitian_matrix(rng));
        PauliCoefficients c = pauli_decompose(h);
        EXPECT_LT((pauli_reconstruct(c) - h.matrix()).cwiseAbs().maxCoeff(), 1e-12);
        ComplexMatrix parts = nonlocal_part(c) + kron(local_part_a(c), identity(2)) +
                              kron(identity(2), local_part_b(c)) + c.trace_part * identity(4);
        EXPECT_LT((parts - h.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(CanonicalFormTest, DocumentedCases) {
    PauliCoefficients c;
    c.gamma = RealMatrix3::Zero();
    c.gamma(2, 2) = 1;
    CanonicalForm ising = canonical_form(c);
    EXPECT_LT((ising.mu - RealVector3(1, 0, 0)).norm(), 1e-14);
    EXPECT_EQ(ising.det_sign, 1);

    c.gamma = RealMatrix3::Identity();
    CanonicalForm iso = canonical_form(c);
    EXPECT_LT((iso.mu - RealVector3(1, 1, 1)).norm(), 1e-14);
    EXPECT_EQ(iso.det_sign, 1);

    c.gamma.diagonal() << 1, 1, -1;
    CanonicalForm neg = canonical_form(c);
    EXPECT_LT((neg.mu - RealVector3(1, 1, 1)).norm(), 1e-14);
    EXPECT_EQ(neg.det_sign, -1);
}

TEST(CanonicalFormTest, FrameMapsToStandardForm) {
    std::mt19937_64 rng(23);
    int negatives = 0;
    for (int trial = 0; trial < 100; trial++) {
        TwoQubitHamiltonian h(testutil::random_hermitian_matrix(rng));
        PauliCoefficients c = pauli_decompose(h);
        CanonicalForm cf = canonical_form(c);
        EXPECT_GE(cf.mu(0), cf.mu(1));
        EXPECT_GE(cf.mu(1), cf.mu(2));
        EXPECT_GE(cf.mu(2), 0);
        ComplexMatrix w = cf.frame();
        ComplexMatrix in_frame = w.adjoint() * nonlocal_part(c) * w;
        EXPECT_LT((in_frame - standard_form(cf.mu, cf.det_sign)).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT((cf.standard_form() - standard_form(cf.mu, cf.det_sign)).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_LT(unitarity_defect(cf.u_a), 1e-12);
        EXPECT_LT(unitarity_defect(cf.v_b), 1e-12);
        negatives += cf.det_sign < 0;
    }
    EXPECT_GT(negatives, 0);
}

TEST(CanonicalFormTest, SingularValuesMatchGamma) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; trial++) {
        PauliCoefficients c = pauli_decompose(TwoQubitHamiltonian(testutil::random_hermitian_matrix(rng)));
        Eigen::JacobiSVD<RealMatrix3> svd(c.gamma);
        CanonicalForm cf = canonical_form(c);
        EXPECT_LT((svd.singularValues() - cf.mu).norm(), 1e-12);
        EXPECT_EQ(cf.det_sign, c.gamma.determinant() < 0 ? -1 : 1);
    }
}

TEST(Su2FromSo3, Identity) {
    ComplexMatrix u = su2_from_so3(RealMatrix3::Identity());
    EXPECT_LT(testutil::distance_up_to_phase(u, identity(2)), 1e-14);
}

TEST(Su2FromSo3, PiAboutZIsProportionalToZ) {
    ComplexMatrix u = su2_from_so3(rotation_z(std::numbers::pi));
    EXPECT_LT(testutil::distance_up_to_phase(u, pauli(3)), 1e-12);
    EXPECT_LT((conjugation_matrix(u) - rotation_z(std::numbers::pi)).norm(), 1e-12);
}

TEST(Su2FromSo3, AngleAboutZ) {
    for (double theta : {std::numbers::pi / 3, std::numbers::pi / 2}) {
        ComplexMatrix u = su2_from_so3(rotation_z(theta));
        ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
        expected(0, 0) = std::polar(1.0, theta / 2);
        expected(1, 1) = std::polar(1.0, -theta / 2);
        EXPECT_LT(testutil::distance_up_to_phase(u, expected), 1e-12) << theta;
        EXPECT_LT((conjugation_matrix(u) - rotation_z(theta)).norm(), 1e-12);
    }
}

TEST(Su2FromSo3, RandomRotationsSatisfyConjugation) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; trial++) {
        ComplexMatrix v = testutil::random_unitary_matrix(rng, 2);
        RealMatrix3 o = conjugation_matrix(v);
        ComplexMatrix u = su2_from_so3(o);
        EXPECT_LT((conjugation_matrix(u) - o).norm(), 1e-10);
        EXPECT_LT(testutil::distance_up_to_phase(u, v), 1e-10);
    }
}

TEST(Su2FromSo3, RejectsReflections) {
    RealMatrix3 reflection = RealMatrix3::Identity();
    reflection(2, 2) = -1;
    try {
        su2_from_so3(reflection);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSpecialOrthogonal);
    }
    EXPECT_THROW(su2_from_so3(2 * RealMatrix3::Identity()), Error);
}

TEST(Timescale, Examples) {
    EXPECT_NEAR(timescale(models::ising()), 0.5, 1e-14);
    EXPECT_NEAR(timescale(models::ising().scaled(2)), 0.25, 1e-14);
    // Heisenberg spectrum: singlet -3, triplet +1.
    Eigensystem es = hermitian_eigensystem(models::heisenberg().matrix());
    EXPECT_NEAR(es.values(0), -3, 1e-13);
    EXPECT_NEAR(es.values(3), 1, 1e-13);
    EXPECT_NEAR(timescale(models::heisenberg()), 0.25, 1e-14);
}

TEST(Timescale, DegenerateSpectrum) {
    try {
        timescale(TwoQubitHamiltonian(3.0 * identity(4)));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateSpectrum);
    }
}

TEST(Models, Couplings) {
    EXPECT_LT((canonical_form(models::xy()).mu - RealVector3(1, 1, 0)).norm(), 1e-14);
    CanonicalForm cf = canonical_form(models::from_couplings(3, 2, 1));
    EXPECT_LT((cf.mu - RealVector3(3, 2, 1)).norm(), 1e-13);
}

TEST(Invariance, MuAndSignUnderLocalUnitaries) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 50; trial++) {
        TwoQubitHamiltonian h(testutil::random_hermitian_matrix(rng));
        ComplexMatrix w = kron(testutil::random_unitary_matrix(rng, 2), testutil::random_unitary_matrix(rng, 2));
        TwoQubitHamiltonian moved(w * h.matrix() * w.adjoint());
        CanonicalForm a = canonical_form(h), b = canonical_form(moved);
        EXPECT_LT((a.mu - b.mu).norm(), 1e-10);
        EXPECT_EQ(a.det_sign, b.det_sign);
    }
}
