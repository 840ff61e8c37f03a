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

#include <algorithm>
#include <numbers>
#include <sstream>

#include "entcap/ancilla.hpp"
#include "entcap/errors.hpp"
#include "entcap/oracle.hpp"
#include "entcap/protocol.hpp"
#include "test_support.hpp"

using namespace entcap;

namespace {

ErrorCode config_error(const TwoQubitHamiltonian &h, const ProtocolConfig &cfg) {
    try {
        validate_protocol_config(h, cfg);
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "configuration accepted";
    return ErrorCode::InvalidArgument;
}

double max_deviation(const ProtocolTrace &trace) {
    double worst = 0;
    for (const auto &r : trace.records) {
        worst = std::max(worst, r.deviation);
    }
    return worst;
}

double max_drift(const ProtocolTrace &trace) {
    return trace.tail_drift.empty() ? 0 : *std::max_element(trace.tail_drift.begin(), trace.tail_drift.end());
}

}  // namespace

TEST(ProtocolConfigTest, Validation) {
    TwoQubitHamiltonian ising = models::ising();  // tau_H = 1/2
    ProtocolConfig cfg;
    cfg.dt = 0;
    EXPECT_EQ(config_error(ising, cfg), ErrorCode::InvalidArgument);
    cfg.dt = 1e-3;
    cfg.t_end = 1e-4;
    EXPECT_EQ(config_error(ising, cfg), ErrorCode::InvalidArgument);
    cfg.t_end = 1;
    cfg.initial_p = 0.7;
    EXPECT_EQ(config_error(ising, cfg), ErrorCode::InvalidArgument);
    cfg.initial_p = 0;
    cfg.dt = 0.006;
    EXPECT_EQ(config_error(ising, cfg), ErrorCode::StepTooLarge);
    cfg.dt = 0.005;
    EXPECT_NO_THROW(validate_protocol_config(ising, cfg));
}

TEST(ProtocolConfigTest, StepMessageStatesBound) {
    ProtocolConfig cfg;
    cfg.dt = 0.1;
    try {
        validate_protocol_config(models::ising(), cfg);
        FAIL();
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("0.005"), std::string::npos) << e.what();
    }
}

TEST(OptimalProtocol, ZeroHamiltonianIsFlat) {
    TwoQubitHamiltonian zero(ComplexMatrix::Zero(4, 4));
    ProtocolConfig cfg;
    cfg.initial_p = 0.2;
    cfg.t_end = 0.05;
    ProtocolTrace trace = run_optimal_protocol(zero, cfg);
    EXPECT_EQ(trace.total_steps, 50);
    for (const auto &r : trace.records) {
        EXPECT_NEAR(r.p, 0.2, 1e-12);
        EXPECT_NEAR(r.e, entropy_of_entanglement(0.2), 1e-12);
    }
}

TEST(OptimalProtocol, XXReachesMaximalEntanglementAtQuarterPeriod) {
    TwoQubitHamiltonian xx(kron(pauli(1), pauli(1)));
    ProtocolConfig cfg;
    cfg.t_end = 1;
    ProtocolTrace trace = run_optimal_protocol(xx, cfg);
    const auto &last = trace.records.back();
    EXPECT_NEAR(last.e, 1, 1e-5);
    EXPECT_NEAR(last.t, std::numbers::pi / 4, 5e-3);
    EXPECT_LE(verify_trace(trace, 1), 1e-2);
}

TEST(OptimalProtocol, TraceInvariants) {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 5; trial++) {
        TwoQubitHamiltonian h(testutil::random_hermitian_matrix(rng));
        ProtocolConfig cfg;
        cfg.dt = 0.01 * timescale(h);
        cfg.t_end = 2;
        ProtocolTrace trace = run_optimal_protocol(h, cfg);
        EXPECT_LE(trace.max_norm_defect, 1e-10);
        EXPECT_LE(trace.max_restoration_change, 1e-12);
        for (std::size_t i = 1; i < trace.records.size(); i++) {
            EXPECT_GE(trace.records[i].e, trace.records[i - 1].e - 1e-9);
        }
        EXPECT_GT(trace.records.back().p, 0.49);
    }
}

TEST(OptimalProtocol, IsingStaysOnClosedFormExactly) {
    // Without local fields the optimal two-dimensional subspace is invariant
    // under the evolution, so the trace is exact up to round-off at every dt.
    for (double dt : {1e-3, 5e-4}) {
        ProtocolConfig cfg;
        cfg.dt = dt;
        ProtocolTrace trace = run_optimal_protocol(models::ising(), cfg);
        EXPECT_LT(max_deviation(trace), 1e-12) << dt;
    }
}

TEST(OptimalProtocol, LocalFieldsGiveSecondOrderDeviation) {
    TwoQubitHamiltonian h(random_hermitian(2));
    double dt = 0.01 * timescale(h);
    ProtocolConfig cfg;
    cfg.t_end = 2;
    cfg.dt = dt;
    double coarse = max_deviation(run_optimal_protocol(h, cfg));
    cfg.dt = dt / 2;
    double fine = max_deviation(run_optimal_protocol(h, cfg));
    EXPECT_GT(coarse, 1e-9);
    EXPECT_NEAR(coarse / fine, 4, 0.6);
}

TEST(OptimalProtocol, DiscreteRateMatchesCapability) {
    TwoQubitHamiltonian h = models::heisenberg();
    EntanglementMeasure m = entropy_measure();
    ProtocolConfig cfg;
    cfg.dt = 1e-3 / 2;  // 1e-3 / h_max
    cfg.initial_p = optimal_p0(m);
    ProtocolTrace trace = run_optimal_protocol(h, cfg);
    ASSERT_GT(trace.records.size(), 10u);
    for (std::size_t i = 0; i + 1 < 10; i++) {
        const auto &a = trace.records[i];
        const auto &b = trace.records[i + 1];
        double discrete = (b.e - a.e) / cfg.dt;
        double expected = rate_factor_f(a.p, m) * 2;
        EXPECT_NEAR(discrete / expected, 1, 0.05);
    }
}

TEST(Restoration, AlreadyOptimalIsIdentity) {
    CanonicalForm cf = canonical_form(models::ising());
    Restoration r = restore_optimal(optimal_state(cf, 0.2), cf);
    EXPECT_LT(testutil::distance_up_to_phase(r.u_a, identity(2)), 1e-10);
    EXPECT_LT(testutil::distance_up_to_phase(r.v_b, identity(2)), 1e-10);
}

TEST(Restoration, BellStaysMaximal) {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = bell(3) = 1 / std::numbers::sqrt2;
    Restoration r = restore_optimal(PureState(2, 2, bell), canonical_form(models::heisenberg()));
    EXPECT_NEAR(partial_trace(r.state, Subsystem::A).determinant().real(), 0.25, 1e-12);
}

TEST(Restoration, RandomStateBecomesOptimal) {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 20; trial++) {
        TwoQubitHamiltonian h(testutil::random_hermitian_matrix(rng));
        CanonicalForm cf = canonical_form(h);
        ComplexVector v = ComplexVector::Zero(4);
        v(0) = std::sqrt(0.8);
        v(3) = std::sqrt(0.2);
        ComplexMatrix w = kron(testutil::random_unitary_matrix(rng, 2), testutil::random_unitary_matrix(rng, 2));
        PureState s(2, 2, w * v);
        Restoration r = restore_optimal(s, cf);
        EXPECT_NEAR(testutil::smaller_weight(r.state), 0.2, 1e-12);
        EXPECT_NEAR(dp_dt(r.state, h).value, 2 * std::sqrt(0.2 * 0.8) * h_max(cf), 1e-10);
        EXPECT_LT(unitarity_defect(r.u_a), 1e-12);
        EXPECT_LT(unitarity_defect(r.v_b), 1e-12);
    }
}

TEST(AncillaProtocol, ZeroHamiltonianIsFlat) {
    TwoQubitHamiltonian zero(ComplexMatrix::Zero(4, 4));
    ProtocolConfig cfg;
    cfg.mode = ProtocolMode::Ancilla;
    cfg.initial_p = 0.7;
    cfg.t_end = 0.02;
    ProtocolTrace trace = run_ancilla_protocol(zero, cfg);
    for (const auto &r : trace.records) {
        EXPECT_NEAR(r.p, 0.7, 1e-12);
    }
}

TEST(AncillaProtocol, IsotropicInitialRate) {
    ProtocolConfig cfg;
    cfg.mode = ProtocolMode::Ancilla;
    cfg.initial_p = optimal_p_tilde();
    cfg.t_end = 0.5;
    ProtocolTrace trace = run_ancilla_protocol(models::heisenberg(), cfg);
    EXPECT_NEAR(trace.records.front().gamma, 1.6853 * 3, 1e-3);
    EXPECT_NEAR(trace.records.back().p, 0.25, 2e-3);
    EXPECT_NEAR(trace.records.back().e, 2, 1e-4);
    EXPECT_LE(max_deviation(trace), 1e-6);
}

TEST(AncillaProtocol, TailDriftIsFirstOrderAndReported) {
    TwoQubitHamiltonian h(random_hermitian(2));
    double dt = 0.01 * timescale(h);
    ProtocolConfig cfg;
    cfg.mode = ProtocolMode::Ancilla;
    cfg.initial_p = optimal_p_tilde();
    cfg.t_end = 0.3;
    cfg.dt = dt;
    ProtocolTrace coarse = run_ancilla_protocol(h, cfg);
    cfg.dt = dt / 2;
    ProtocolTrace fine = run_ancilla_protocol(h, cfg);
    ASSERT_EQ(coarse.tail_drift.size(), static_cast<std::size_t>(coarse.total_steps));
    EXPECT_GT(max_drift(coarse), 1e-6);
    EXPECT_NEAR(max_drift(coarse) / max_drift(fine), 2, 0.3);
    EXPECT_LE(coarse.max_norm_defect, 1e-10);
}

TEST(VerifyTrace, SyntheticTraces) {
    ProtocolTrace trace;
    for (int k = 0; k <= 100; k++) {
        double t = k * 0.007;
        trace.records.push_back({t, closed_form_p(t, 1, 0), 0, 0, 0});
    }
    EXPECT_LT(verify_trace(trace, 1), 1e-15);
    for (auto &r : trace.records) {
        r.p += 0.1;
    }
    EXPECT_NEAR(verify_trace(trace, 1), 0.1, 1e-12);
}

TEST(TraceCsv, HeaderAndPlainDecimals) {
    ProtocolTrace trace;
    trace.records.push_back({0.001, 1e-16, 0.5, 2.25, 0});
    std::ostringstream out;
    write_trace_csv(out, trace);
    EXPECT_EQ(out.str(), "t,P,E,gamma,deviation\n0.001,0.0000000000000001,0.5,2.25,0\n");
}

TEST(TraceCsv, PlainDecimalFormatting) {
    EXPECT_EQ(plain_decimal(0.1), "0.1");
    EXPECT_EQ(plain_decimal(-2.5), "-2.5");
    EXPECT_EQ(plain_decimal(123456789.123456), "123456789.123");
    EXPECT_EQ(plain_decimal(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(plain_decimal(0), "0");
}
