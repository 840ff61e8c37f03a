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

#include "entcap/hamsim.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "entcap/ancilla.hpp"
#include "entcap/capability.hpp"
#include "entcap/errors.hpp"

namespace entcap {

namespace {

constexpr double kZeroCoupling = 1e-12;

void require_coupling(const CanonicalForm &source) {
    if (source.mu(0) <= kZeroCoupling) {
        throw Error(ErrorCode::ZeroCoupling, "source Hamiltonian has no interaction (mu1 = 0)");
    }
}

// R with R s1 R^dagger = s_k, optionally followed by a Pauli on A that flips
// the sign of s_k(x)s_k.
LocalPair axis_map(int k, int sign) {
    const Complex i(0, 1);
    const double c = std::cos(std::numbers::pi / 4);
    ComplexMatrix r = identity(2);
    if (k == 2) {
        r = c * pauli(0) - i * c * pauli(3);  // exp(-i pi/4 s3)
    } else if (k == 3) {
        r = c * pauli(0) + i * c * pauli(2);  // exp(+i pi/4 s2)
    }
    LocalPair q{r, r};
    if (sign < 0) {
        q.a = pauli(k == 1 ? 3 : 1) * q.a;
    }
    return q;
}

struct Frame {
    ComplexMatrix a = identity(2);
    ComplexMatrix b = identity(2);
};

// Appends segments realizing exp(-i sign mu1 s_k(x)s_k tau) conjugated by the
// outer frame, using one decoupling cycle.
void append_cycle(std::vector<PulseStep> &steps, const CanonicalForm &source, const std::vector<LocalPair> &group,
                  const LocalPair &q, const Frame &outer, double tau) {
    const double d = tau / static_cast<double>(group.size());
    for (const LocalPair &g : group) {
        PulseStep s;
        s.duration = d;
        s.pre_local.a = source.u_a * g.a * q.a.adjoint() * outer.a.adjoint();
        s.pre_local.b = source.v_b * g.b * q.b.adjoint() * outer.b.adjoint();
        s.post_local.a = outer.a * q.a * g.a.adjoint() * source.u_a.adjoint();
        s.post_local.b = outer.b * q.b * g.b.adjoint() * source.v_b.adjoint();
        steps.push_back(std::move(s));
    }
}

int slice_count(double t, double dt) {
    if (!(dt > 0)) {
        throw Error(ErrorCode::InvalidArgument, "time step must be positive");
    }
    return std::max(1, static_cast<int>(std::ceil(t / dt - 1e-9)));
}

double sum_durations(const std::vector<PulseStep> &steps) {
    double total = 0;
    for (const auto &s : steps) {
        total += s.duration;
    }
    return total;
}

SimulationSchedule build_impl(const CanonicalForm &source, const CanonicalForm &target, const ComplexMatrix *local_a,
                              const ComplexMatrix *local_b, double t, double dt, AlphaRatio ratio,
                              Decoupling mode) {
    require_coupling(source);
    if (!(t >= 0)) {
        throw Error(ErrorCode::InvalidArgument, "build_schedule: target time must be nonnegative");
    }
    const auto group = decoupling_group(mode);
    const Frame outer{target.u_a, target.v_b};

    SimulationSchedule out;
    out.target_time = t;
    const int n = t > 0 ? slice_count(t, dt) : 0;
    const double slice = n > 0 ? t / n : 0;

    LocalPair local_step;
    if (local_a && local_b) {
        local_step.a = unitary_evolution(*local_a, slice);
        local_step.b = unitary_evolution(*local_b, slice);
    }

    for (int s = 0; s < n; s++) {
        if (local_a && local_b) {
            PulseStep p;
            p.pre_local = local_step;
            out.steps.push_back(std::move(p));
        }
        for (int k = 1; k <= 3; k++) {
            double mu_target = target.mu(k - 1);
            if (mu_target <= 0) {
                continue;
            }
            int sign = (k == 2 && target.det_sign < 0) ? -1 : 1;
            append_cycle(out.steps, source, group, axis_map(k, sign), outer, slice * mu_target / source.mu(0));
        }
    }

    out.native_time = sum_durations(out.steps);
    double ours, theirs;
    if (ratio == AlphaRatio::HMax) {
        ours = h_max(source);
        theirs = h_max(target);
    } else {
        ours = h_tilde_max(source);
        theirs = h_tilde_max(target);
    }
    out.alpha = theirs > 0 ? ours / theirs : std::numeric_limits<double>::infinity();
    out.time_bound = theirs > 0 ? 3 * t / out.alpha : 0;
    if (out.native_time > out.time_bound + 1e-12 * std::max(1.0, out.time_bound)) {
        throw Error(ErrorCode::InvalidArgument, "build_schedule: native time exceeds 3 t / alpha");
    }
    return out;
}

}  // namespace

std::vector<LocalPair> decoupling_group(Decoupling mode) {
    const ComplexMatrix &id = pauli(0);
    const ComplexMatrix &x = pauli(1);
    if (mode == Decoupling::PauliSandwich) {
        return {LocalPair{id, id}, LocalPair{x, id}};
    }
    const ComplexMatrix &z = pauli(3);
    std::vector<LocalPair> group;
    for (int c = 0; c < 2; c++) {
        for (int b = 0; b < 2; b++) {
            for (int a = 0; a < 2; a++) {
                ComplexMatrix ga = (a ? x : id) * (c ? z : id);
                ComplexMatrix gb = (b ? x : id) * (c ? z : id);
                group.push_back(LocalPair{ga, gb});
            }
        }
    }
    return group;
}

SimulationSchedule synthesize_component(const CanonicalForm &cf, int k, double tau, double dt, Decoupling mode) {
    require_coupling(cf);
    if (k < 1 || k > 3) {
        throw Error(ErrorCode::InvalidArgument, "synthesize_component: axis must be 1, 2 or 3");
    }
    if (!(tau >= 0) || !(dt > 0)) {
        throw Error(ErrorCode::InvalidArgument, "synthesize_component: require tau >= 0 and dt > 0");
    }
    const auto group = decoupling_group(mode);
    SimulationSchedule out;
    out.target_time = tau;
    if (tau > 0) {
        const int n = slice_count(tau, dt);
        for (int s = 0; s < n; s++) {
            append_cycle(out.steps, cf, group, axis_map(k, 1), Frame{}, tau / n);
        }
    }
    out.native_time = sum_durations(out.steps);
    out.alpha = 1;
    out.time_bound = 3 * tau;
    return out;
}

SimulationSchedule build_schedule(const CanonicalForm &source, const CanonicalForm &target, double t, double dt,
                                  AlphaRatio ratio, Decoupling mode) {
    return build_impl(source, target, nullptr, nullptr, t, dt, ratio, mode);
}

SimulationSchedule build_schedule(const CanonicalForm &source, const TwoQubitHamiltonian &target, double t,
                                  double dt, AlphaRatio ratio, Decoupling mode) {
    PauliCoefficients coeffs = pauli_decompose(target);
    CanonicalForm cf = canonical_form(coeffs);
    ComplexMatrix la = local_part_a(coeffs);
    ComplexMatrix lb = local_part_b(coeffs);
    bool has_locals = la.cwiseAbs().maxCoeff() > 0 || lb.cwiseAbs().maxCoeff() > 0;
    if (!has_locals) {
        return build_impl(source, cf, nullptr, nullptr, t, dt, ratio, mode);
    }
    return build_impl(source, cf, &la, &lb, t, dt, ratio, mode);
}

double default_dt(const CanonicalForm &source, const CanonicalForm &target) {
    double fastest = std::max(h_max(source), h_max(target));
    return fastest > 0 ? 0.01 / fastest : 0.01;
}

ComplexMatrix execute_schedule(const SimulationSchedule &schedule, const TwoQubitHamiltonian &source) {
    Eigensystem es = hermitian_eigensystem(source.matrix());
    ComplexMatrix u = identity(4);
    for (const PulseStep &s : schedule.steps) {
        ComplexMatrix evo = identity(4);
        if (s.duration != 0) {
            ComplexVector phases(4);
            for (int k = 0; k < 4; k++) {
                phases(k) = std::exp(Complex(0, -es.values(k) * s.duration));
            }
            evo = es.vectors * phases.asDiagonal() * es.vectors.adjoint();
        }
        u = s.post_local.joint() * evo * s.pre_local.joint() * u;
    }
    return u;
}

double simulation_error(const ComplexMatrix &u_achieved, const ComplexMatrix &h_target, double t) {
    ComplexMatrix ideal = unitary_evolution(h_target, t);
    Complex overlap = (ideal.adjoint() * u_achieved).trace();
    Complex phase = std::abs(overlap) > 1e-300 ? overlap / std::abs(overlap) : Complex(1, 0);
    return operator_norm(u_achieved - phase * ideal);
}

}  // namespace entcap
