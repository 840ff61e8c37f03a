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

#include "entcap/ancilla.hpp"
#include "entcap/errors.hpp"
#include "test_support.hpp"

using namespace entcap;

namespace {

int index16(int qa, int aa, int qb, int ab) {
    return ((qa * 2 + aa) * 2 + qb) * 2 + ab;
}

// Two-qubit state with both ancillas in |0>.
PureState with_idle_ancillas(const PureState &s) {
    ComplexVector v = ComplexVector::Zero(16);
    for (int qa = 0; qa < 2; qa++) {
        for (int qb = 0; qb < 2; qb++) {
            v(index16(qa, 0, qb, 0)) = s.amplitudes(qa * 2 + qb);
        }
    }
    return PureState(4, 4, v);
}

double fd_spectrum_entropy_rate(const PureState &s, const ComplexMatrix &h_total, double eps) {
    auto entropy = [](const PureState &x) { return entropy_of_spectrum(schmidt_decompose(x).coefficients); };
    return (entropy(entcap::apply(unitary_evolution(h_total, eps), s)) - entropy(entcap::apply(unitary_evolution(h_total, -eps), s))) /
           (2 * eps);
}

}  // namespace

TEST(Embedding, MatchesExplicitPermutation) {
    std::mt19937_64 rng(61);
    ComplexMatrix h = testutil::random_hermitian_matrix(rng);
    // kron(h, I4) is ordered (qa, qb, aa, ab); permute to (qa, aa, qb, ab).
    ComplexMatrix natural = kron(h, identity(4));
    ComplexMatrix perm = ComplexMatrix::Zero(16, 16);
    for (int qa = 0; qa < 2; qa++) {
        for (int qb = 0; qb < 2; qb++) {
            for (int aa = 0; aa < 2; aa++) {
                for (int ab = 0; ab < 2; ab++) {
                    perm(index16(qa, aa, qb, ab), ((qa * 2 + qb) * 2 + aa) * 2 + ab) = 1;
                }
            }
        }
    }
    ComplexMatrix expected = perm * natural * perm.transpose();
    EXPECT_LT((embed_qubit_hamiltonian(h) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Embedding, LocalZActsOnQubitIndexOnly) {
    ComplexMatrix e = embed_qubit_hamiltonian(kron(pauli(3), identity(2)));
    for (int qa = 0; qa < 2; qa++) {
        for (int aa = 0; aa < 2; aa++) {
            int k = index16(qa, aa, 1, 1);
            EXPECT_EQ(e(k, k).real(), qa == 0 ? 1 : -1);
        }
    }
}

TEST(LambdaDot, CommutingHamiltonianIsZero) {
    std::mt19937_64 rng(67);
    auto st = MultilevelSchmidtState::from_state(testutil::random_state(rng, 4, 4));
    ComplexMatrix id = identity(16);
    for (int n = 0; n < 4; n++) {
        EXPECT_NEAR(lambda_dot(st, id, n), 0, 1e-14);
    }
}

TEST(LambdaDot, TwoLevelEmbeddingMatchesDpDt) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; trial++) {
        PureState s = testutil::random_state(rng);
        TwoQubitHamiltonian h(testutil::random_hermitian_matrix(rng));
        auto st = MultilevelSchmidtState::from_state(with_idle_ancillas(s));
        ComplexMatrix ht = embed_qubit_hamiltonian(h.matrix());
        EXPECT_NEAR(lambda_dot(st, ht, 1), dp_dt(s, h).value, 1e-10);
        EXPECT_NEAR(lambda_dot(st, ht, 0), -dp_dt(s, h).value, 1e-10);
    }
}

TEST(LambdaDot, Conservation) {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 20; trial++) {
        auto st = MultilevelSchmidtState::from_state(testutil::random_state(rng, 4, 4));
        ComplexMatrix ht = embed_qubit_hamiltonian(testutil::random_hermitian_matrix(rng));
        double total = 0;
        for (int n = 0; n < 4; n++) {
            total += lambda_dot(st, ht, n);
        }
        EXPECT_NEAR(total, 0, 1e-12);
    }
}

TEST(MultilevelRate, ZeroHamiltonian) {
    std::mt19937_64 rng(79);
    auto st = MultilevelSchmidtState::from_state(testutil::random_state(rng, 4, 4));
    EXPECT_EQ(multilevel_rate(st, ComplexMatrix::Zero(16, 16)).value, 0);
}

TEST(MultilevelRate, AncillaFreeEmbeddingReproducesTwoQubitRate) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 20; trial++) {
        PureState s = testutil::random_state(rng);
        TwoQubitHamiltonian h(testutil::random_hermitian_matrix(rng));
        auto st = MultilevelSchmidtState::from_state(with_idle_ancillas(s));
        FlaggedValue r = multilevel_rate(st, embed_qubit_hamiltonian(h.matrix()));
        EXPECT_TRUE(r.degenerate);  // two vanishing weights
        EXPECT_NEAR(r.value, rate_gamma(s, h, entropy_measure()).value, 1e-9);
    }
}

TEST(MultilevelRate, AgreesWithFiniteDifference) {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 30; trial++) {
        PureState s = testutil::random_state(rng, 4, 4);
        ComplexMatrix ht = embed_qubit_hamiltonian(testutil::random_hermitian_matrix(rng));
        auto st = MultilevelSchmidtState::from_state(s);
        EXPECT_NEAR(multilevel_rate(st, ht).value, fd_spectrum_entropy_rate(s, ht, 1e-6), 1e-6);
    }
}

TEST(FTilde, Examples) {
    EXPECT_NEAR(f_tilde(0.25), 0, 1e-15);
    EXPECT_NEAR(std::abs(f_tilde(0.8515)), 1.6853, 1e-3);
    EXPECT_NEAR(equal_tail_entropy(0.8515), 0.8415, 1e-3);
    EXPECT_NEAR(equal_tail_entropy(0.25), 2, 1e-14);
    EXPECT_THROW(f_tilde(0), Error);
    EXPECT_THROW(f_tilde(1.2), Error);
}

TEST(FTilde, DerivativeMatchesDifference) {
    for (double p : {0.3, 0.6, 0.85, 0.95}) {
        double h = 1e-6;
        EXPECT_NEAR(f_tilde_derivative(p), (f_tilde(p + h) - f_tilde(p - h)) / (2 * h), 1e-5);
    }
}

TEST(FTilde, EqualTailInverse) {
    for (double e : {0.2, 0.8415, 1.5}) {
        EXPECT_NEAR(equal_tail_entropy(equal_tail_p_for_entropy(e)), e, 1e-10);
    }
}

TEST(OptimalPTilde, Examples) {
    double p = optimal_p_tilde();
    EXPECT_NEAR(p, 0.8515, 5e-4);
    EXPECT_NEAR(std::abs(f_tilde(p)), 1.6853, 1e-3);
    EXPECT_LT(std::abs(f_tilde(p - 1e-3)), std::abs(f_tilde(p)));
    EXPECT_LT(std::abs(f_tilde(p + 1e-3)), std::abs(f_tilde(p)));
}

TEST(HTildeMax, Examples) {
    CanonicalForm cf;
    cf.mu = RealVector3(1, 1, 1);
    EXPECT_EQ(h_tilde_max(cf), 3);
    cf.mu = RealVector3(1, 1, 0);
    EXPECT_EQ(h_tilde_max(cf), 2);
    EXPECT_EQ(h_tilde_max(cf), h_max(cf));
    cf.mu = RealVector3(3, 2, 1);
    EXPECT_EQ(h_tilde_max(cf), 6);
}

TEST(BellPattern, PrincipalBranchPhases) {
    // 1, i^{3/2}, i^{1/2}, i^{3/2}: phases 0, 3 pi/4, pi/4, 3 pi/4.
    BellPhasePattern expected{0, 3, 1, 3};
    EXPECT_EQ(bell_phase_pattern(1, -1), expected);
}

TEST(BellConfiguration, Structure) {
    for (int det : {1, -1}) {
        MultilevelSchmidtState st = bell_configuration(0.7, det);
        ASSERT_EQ(st.lambdas.size(), 4u);
        EXPECT_NEAR(st.lambdas[0], 0.7, 1e-15);
        EXPECT_NEAR(st.lambdas[1] + st.lambdas[2] + st.lambdas[3], 0.3, 1e-15);
        EXPECT_LT((st.phi_vectors.adjoint() * st.phi_vectors - identity(4)).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((st.chi_vectors.adjoint() * st.chi_vectors - identity(4)).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(st.to_state().amplitudes.norm(), 1, 1e-12);
    }
    EXPECT_THROW(bell_configuration(0, 1), Error);
    EXPECT_THROW(bell_configuration(1.2, 1), Error);
}

TEST(BellConfiguration, QuarterHasNoRate) {
    std::mt19937_64 rng(97);
    TwoQubitHamiltonian h(testutil::random_hermitian_matrix(rng));
    auto st = bell_configuration(canonical_form(h), 0.25);
    EXPECT_NEAR(multilevel_rate(st, embed_qubit_hamiltonian(h.matrix())).value, 0, 1e-10);
}

TEST(BellConfiguration, IsotropicOptimum) {
    TwoQubitHamiltonian iso = models::heisenberg();
    auto st = bell_configuration(canonical_form(iso), optimal_p_tilde());
    double rate = multilevel_rate(st, embed_qubit_hamiltonian(iso.matrix())).value;
    EXPECT_NEAR(rate, 1.6853 * 3, 1e-3);
}

TEST(BellConfiguration, AttainsSumOfCouplingsOnRandomHamiltonians) {
    std::mt19937_64 rng(101);
    int negatives = 0;
    for (int trial = 0; trial < 40; trial++) {
        TwoQubitHamiltonian h(testutil::random_hermitian_matrix(rng));
        CanonicalForm cf = canonical_form(h);
        negatives += cf.det_sign < 0;
        for (double p : {0.1, 0.6, 0.9}) {
            auto st = bell_configuration(cf, p);
            double rate = multilevel_rate(st, embed_qubit_hamiltonian(h.matrix())).value;
            EXPECT_NEAR(rate, std::abs(f_tilde(p)) * h_tilde_max(cf), 1e-9) << "det " << cf.det_sign << " p " << p;
        }
    }
    EXPECT_GT(negatives, 0);
}

TEST(Comparison, IsotropicAncillaWins) {
    CanonicalForm iso = canonical_form(models::heisenberg());
    AncillaComparison c = compare_with_without_ancilla(iso, 0.5);
    EXPECT_TRUE(c.ancilla_wins);
    ASSERT_TRUE(c.gamma_e.has_value());
    EXPECT_GT(c.gamma_tilde_e, *c.gamma_e);
    auto cross = ancilla_crossover(iso);
    ASSERT_TRUE(cross.has_value());
    EXPECT_NEAR(*cross, 0.08, 0.01);
    EXPECT_FALSE(compare_with_without_ancilla(iso, 0.5 * *cross).ancilla_wins);
    EXPECT_FALSE(compare_with_without_ancilla(iso, 1.5).gamma_e.has_value());
}

TEST(Comparison, IsingDoesNotBenefit) {
    AncillaReport r = analyze_ancilla(canonical_form(models::ising()));
    CapabilityReport c = analyze_capability(models::ising());
    EXPECT_LT(r.gamma_tilde_max, c.gamma_max);
    ASSERT_TRUE(r.ratio_vs_no_ancilla.has_value());
    EXPECT_NEAR(*r.ratio_vs_no_ancilla, std::abs(f_tilde(optimal_p_tilde())) / c.f_at_p0, 1e-10);
}

TEST(AnalyzeAncilla, ReportInvariants) {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 10; trial++) {
        TwoQubitHamiltonian h(testutil::random_hermitian_matrix(rng));
        CanonicalForm cf = canonical_form(h);
        AncillaReport r = analyze_ancilla(cf);
        CapabilityReport c = analyze_capability(h);
        EXPECT_NEAR(r.gamma_tilde_max, r.f_tilde_at_p0 * r.h_tilde_max, 1e-10);
        ASSERT_TRUE(r.ratio_vs_no_ancilla.has_value());
        EXPECT_NEAR(*r.ratio_vs_no_ancilla, r.gamma_tilde_max / c.gamma_max, 1e-10);
    }
    AncillaReport iso = analyze_ancilla(canonical_form(models::heisenberg()));
    EXPECT_NEAR(*iso.ratio_vs_no_ancilla, 1.3220, 1e-3);
}
