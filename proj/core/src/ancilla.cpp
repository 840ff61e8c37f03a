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

#include "entcap/ancilla.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "entcap/errors.hpp"

namespace entcap {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexVector bell_state(int which) {
    // 0: phi+, 1: psi+, 2: psi-, 3: phi-   (qubit (x) ancilla)
    const double r = 1 / std::sqrt(2.0);
    ComplexVector v = ComplexVector::Zero(4);
    switch (which) {
        case 0:
            v(0) = r;
            v(3) = r;
            break;
        case 1:
            v(1) = r;
            v(2) = r;
            break;
        case 2:
            v(1) = r;
            v(2) = -r;
            break;
        default:
            v(0) = r;
            v(3) = -r;
            break;
    }
    return v;
}

MultilevelSchmidtState canonical_bell(double p, const BellPhasePattern &pattern) {
    MultilevelSchmidtState s;
    double q = (1 - p) / 3;
    s.lambdas = {p, q, q, q};
    s.phi_vectors = ComplexMatrix(4, 4);
    for (int n = 0; n < 4; n++) {
        s.phi_vectors.col(n) = std::polar(1.0, pattern[n] * kPi / 4) * bell_state(n);
    }
    s.chi_vectors = s.phi_vectors;
    return s;
}

double restricted_h_tilde(const MultilevelSchmidtState &s, const ComplexMatrix &h_total) {
    ComplexVector first = kron(ComplexVector(s.phi_vectors.col(0)), ComplexVector(s.chi_vectors.col(0)));
    double total = 0;
    for (int n = 1; n < 4; n++) {
        ComplexVector v = kron(ComplexVector(s.phi_vectors.col(n)), ComplexVector(s.chi_vectors.col(n)));
        total += first.dot(h_total * v).imag();
    }
    return total;
}

}  // namespace

PureState MultilevelSchmidtState::to_state() const {
    ComplexMatrix m = ComplexMatrix::Zero(phi_vectors.rows(), chi_vectors.rows());
    for (size_t n = 0; n < lambdas.size(); n++) {
        m += std::sqrt(lambdas[n]) * phi_vectors.col(n) * chi_vectors.col(n).transpose();
    }
    return PureState::from_coefficient_matrix(m);
}

MultilevelSchmidtState MultilevelSchmidtState::from_state(const PureState &state) {
    SchmidtDecomposition sd = schmidt_decompose(state);
    return {sd.coefficients, sd.left_vectors, sd.right_vectors};
}

ComplexMatrix embed_qubit_hamiltonian(const ComplexMatrix &h) {
    if (h.rows() != 4 || h.cols() != 4) {
        throw Error(ErrorCode::InvalidArgument, "embed_qubit_hamiltonian: 4x4 input expected");
    }
    ComplexMatrix out = ComplexMatrix::Zero(16, 16);
    auto index = [](int qa, int aa, int qb, int ab) { return ((qa * 2 + aa) * 2 + qb) * 2 + ab; };
    for (int qa = 0; qa < 2; qa++) {
        for (int qb = 0; qb < 2; qb++) {
            for (int qa2 = 0; qa2 < 2; qa2++) {
                for (int qb2 = 0; qb2 < 2; qb2++) {
                    Complex v = h(qa * 2 + qb, qa2 * 2 + qb2);
                    for (int aa = 0; aa < 2; aa++) {
                        for (int ab = 0; ab < 2; ab++) {
                            out(index(qa, aa, qb, ab), index(qa2, aa, qb2, ab)) = v;
                        }
                    }
                }
            }
        }
    }
    return out;
}

double lambda_dot(const MultilevelSchmidtState &state, const ComplexMatrix &h_total, int n) {
    const int count = static_cast<int>(state.lambdas.size());
    if (n < 0 || n >= count) {
        throw Error(ErrorCode::InvalidArgument, "lambda_dot: level index out of range");
    }
    ComplexVector bra = kron(ComplexVector(state.phi_vectors.col(n)), ComplexVector(state.chi_vectors.col(n)));
    ComplexVector h_bra = h_total * bra;  // H is Hermitian: <n|H|m> = conj(<m|H|n>)
    double total = 0;
    for (int m = 0; m < count; m++) {
        if (m == n) {
            continue;
        }
        ComplexVector ket = kron(ComplexVector(state.phi_vectors.col(m)), ComplexVector(state.chi_vectors.col(m)));
        Complex element = std::conj(ket.dot(h_bra));
        total += std::sqrt(state.lambdas[n] * state.lambdas[m]) * element.imag();
    }
    return 2 * total;
}

FlaggedValue multilevel_rate(const MultilevelSchmidtState &state, const ComplexMatrix &h_total) {
    FlaggedValue out;
    for (size_t n = 0; n < state.lambdas.size(); n++) {
        double l = state.lambdas[n];
        if (l <= 1e-15) {
            out.degenerate = true;
            continue;
        }
        double d_entropy = -std::log2(l) - 1 / std::numbers::ln2;
        out.value += d_entropy * lambda_dot(state, h_total, static_cast<int>(n));
    }
    return out;
}

double f_tilde(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorCode::OutOfDomain, "f_tilde: argument must lie in (0, 1)");
    }
    return 2 * std::sqrt(p * (1 - p) / 3) * std::log2((1 - p) / (3 * p));
}

double f_tilde_derivative(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorCode::OutOfDomain, "f_tilde_derivative: argument must lie in (0, 1)");
    }
    double g = 2 * std::sqrt(p * (1 - p) / 3);
    double dg = (1 - 2 * p) / std::sqrt(3 * p * (1 - p));
    double l = std::log2((1 - p) / (3 * p));
    double dl = -1 / (std::numbers::ln2 * p * (1 - p));
    return dg * l + g * dl;
}

double equal_tail_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::OutOfDomain, "equal_tail_entropy: argument must lie in [0, 1]");
    }
    double q = (1 - p) / 3;
    return entropy_of_spectrum({p, q, q, q});
}

double equal_tail_p_for_entropy(double e) {
    if (!(e >= 0.0 && e <= 2.0 + 1e-12)) {
        throw Error(ErrorCode::OutOfDomain, "equal_tail_p_for_entropy: entanglement must lie in [0, 2]");
    }
    double lo = 0.25, hi = 1.0;  // entropy decreases from 2 to 0 on this branch
    for (int it = 0; it < 200 && hi - lo > 1e-14; it++) {
        double mid = 0.5 * (lo + hi);
        if (equal_tail_entropy(mid) > e) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double optimal_p_tilde() {
    // |f~| has a small local maximum below 1/4 and the global one above it.
    constexpr int grid = 2000;
    int best = 1;
    double best_val = -1;
    for (int k = 1; k < grid; k++) {
        double v = std::abs(f_tilde(static_cast<double>(k) / grid));
        if (v > best_val) {
            best_val = v;
            best = k;
        }
    }
    double lo = static_cast<double>(best - 1) / grid;
    double hi = static_cast<double>(best + 1) / grid;
    double sign = f_tilde(static_cast<double>(best) / grid) < 0 ? -1.0 : 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13; it++) {
        double mid = 0.5 * (lo + hi);
        if (sign * f_tilde_derivative(mid) > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double h_tilde_max(const CanonicalForm &cf) {
    return cf.mu.sum();
}

BellPhasePattern bell_phase_pattern(int det_sign, int sign) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, BellPhasePattern> cache;
    det_sign = det_sign < 0 ? -1 : 1;
    sign = sign < 0 ? -1 : 1;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({det_sign, sign});
    if (it != cache.end()) {
        return it->second;
    }

    // Probe with distinct couplings so every term has to contribute.
    CanonicalForm probe;
    probe.mu = RealVector3(3, 2, 1);
    probe.det_sign = det_sign;
    ComplexMatrix h_total = embed_qubit_hamiltonian(probe.standard_form());
    const double target = sign * probe.mu.sum();

    auto works = [&](const BellPhasePattern &pattern) {
        return std::abs(restricted_h_tilde(canonical_bell(0.5, pattern), h_total) - target) < 1e-9;
    };

    // i^(3/2), i^(1/2), i^(3/2) on psi+, psi-, phi-.
    BellPhasePattern found{0, 3, 1, 3};
    if (!works(found)) {
        bool ok = false;
        for (int a = 0; a < 8 && !ok; a++) {
            for (int b = 0; b < 8 && !ok; b++) {
                for (int c = 0; c < 8 && !ok; c++) {
                    BellPhasePattern candidate{0, a, b, c};
                    if (works(candidate)) {
                        found = candidate;
                        ok = true;
                    }
                }
            }
        }
        if (!ok) {
            throw Error(ErrorCode::InvalidArgument, "bell_phase_pattern: no constructive phase pattern found");
        }
    }
    cache.emplace(std::make_pair(det_sign, sign), found);
    return found;
}

MultilevelSchmidtState bell_configuration(double p, int det_sign) {
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorCode::OutOfDomain, "bell_configuration: P must lie in (0, 1)");
    }
    // The rate is f~(P) * h~, and f~ changes sign at P = 1/4.
    int sign = f_tilde(p) < 0 ? -1 : 1;
    return canonical_bell(p, bell_phase_pattern(det_sign, sign));
}

MultilevelSchmidtState bell_configuration(const CanonicalForm &cf, double p) {
    MultilevelSchmidtState s = bell_configuration(p, cf.det_sign);
    s.phi_vectors = kron(cf.u_a, identity(2)) * s.phi_vectors;
    s.chi_vectors = kron(cf.v_b, identity(2)) * s.chi_vectors;
    return s;
}

namespace {

double gamma_tilde_at(const CanonicalForm &cf, double e) {
    double p = equal_tail_p_for_entropy(e);
    if (p >= 1.0 - 1e-15) {
        return 0;
    }
    return std::abs(f_tilde(p)) * h_tilde_max(cf);
}

double gamma_at(const CanonicalForm &cf, double e) {
    static const EntanglementMeasure measure = entropy_measure();
    return rate_factor_f(invert_measure(e, measure), measure) * h_max(cf);
}

}  // namespace

std::optional<double> ancilla_crossover(const CanonicalForm &cf) {
    auto diff = [&](double e) { return gamma_tilde_at(cf, e) - gamma_at(cf, e); };
    constexpr int grid = 1000;
    double prev_e = 1e-6;
    double prev = diff(prev_e);
    for (int k = 1; k <= grid; k++) {
        double e = static_cast<double>(k) / grid;
        double d = diff(e);
        if (prev < 0 && d >= 0) {
            double lo = prev_e, hi = e;
            for (int it = 0; it < 100 && hi - lo > 1e-13; it++) {
                double mid = 0.5 * (lo + hi);
                if (diff(mid) < 0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return hi;
        }
        prev = d;
        prev_e = e;
    }
    return std::nullopt;
}

AncillaComparison compare_with_without_ancilla(const CanonicalForm &cf, double e) {
    if (!(e >= 0.0 && e <= 2.0)) {
        throw Error(ErrorCode::OutOfDomain, "compare_with_without_ancilla: entanglement must lie in [0, 2]");
    }
    AncillaComparison out;
    out.gamma_tilde_e = gamma_tilde_at(cf, e);
    if (e <= 1.0) {
        out.gamma_e = gamma_at(cf, e);
    }
    out.ancilla_wins = !out.gamma_e || out.gamma_tilde_e >= *out.gamma_e;
    out.crossover_e = ancilla_crossover(cf);
    return out;
}

AncillaReport analyze_ancilla(const CanonicalForm &cf) {
    static const EntanglementMeasure measure = entropy_measure();
    AncillaReport r;
    r.h_tilde_max = h_tilde_max(cf);
    r.p_tilde0 = optimal_p_tilde();
    r.f_tilde_at_p0 = std::abs(f_tilde(r.p_tilde0));
    r.e_at_p_tilde0 = equal_tail_entropy(r.p_tilde0);
    r.gamma_tilde_max = r.f_tilde_at_p0 * r.h_tilde_max;
    double gamma_max = rate_factor_f(optimal_p0(measure), measure) * h_max(cf);
    if (gamma_max > 0) {
        r.ratio_vs_no_ancilla = r.gamma_tilde_max / gamma_max;
    }
    r.crossover_e = ancilla_crossover(cf);
    return r;
}

}  // namespace entcap
