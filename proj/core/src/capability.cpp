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

#include "entcap/capability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entcap/ancilla.hpp"
#include "entcap/errors.hpp"

namespace entcap {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void require_unit_interval(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::OutOfDomain, std::string(what) + ": argument must lie in [0, 1]");
    }
}

double xlog2x(double x) {
    return x <= 0 ? 0.0 : x * std::log2(x);
}

}  // namespace

EntanglementMeasure entropy_measure() {
    EntanglementMeasure m;
    m.name = "entropy";
    m.value = entropy_of_entanglement;
    m.derivative = [](double p) { return std::log2((1 - p) / p); };
    m.second_derivative = [](double p) { return -1.0 / (kLn2 * p * (1 - p)); };
    return m;
}

EntanglementMeasure linear_measure() {
    EntanglementMeasure m;
    m.name = "linear";
    m.value = [](double p) { return 2 * p; };
    m.derivative = [](double) { return 2.0; };
    m.second_derivative = [](double) { return 0.0; };
    return m;
}

double entropy_of_entanglement(double p) {
    require_unit_interval(p, "entropy_of_entanglement");
    return -xlog2x(p) - xlog2x(1 - p);
}

double entropy_of_spectrum(const std::vector<double> &lambdas) {
    double e = 0;
    for (double l : lambdas) {
        e -= xlog2x(l);
    }
    return e;
}

double rate_factor_f(double p, const EntanglementMeasure &measure) {
    require_unit_interval(p, "rate_factor_f");
    if (p == 0.0 || p == 1.0) {
        return 0.0;
    }
    return 2 * std::sqrt(p * (1 - p)) * measure.derivative(p);
}

double rate_factor_f_derivative(double p, const EntanglementMeasure &measure) {
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorCode::OutOfDomain, "rate_factor_f_derivative: argument must lie in (0, 1)");
    }
    if (!measure.second_derivative) {
        throw Error(ErrorCode::InvalidArgument, "rate_factor_f_derivative: measure has no second derivative");
    }
    double root = std::sqrt(p * (1 - p));
    return (1 - 2 * p) / root * measure.derivative(p) + 2 * root * measure.second_derivative(p);
}

ComplexVector orthogonal_complement(const ComplexVector &qubit) {
    ComplexVector out(2);
    out << -std::conj(qubit(1)), std::conj(qubit(0));
    return out;
}

Complex matrix_element_h(const TwoQubitHamiltonian &h, const ComplexVector &phi, const ComplexVector &chi) {
    ComplexVector bra = kron(phi, chi);
    ComplexVector ket = kron(orthogonal_complement(phi), orthogonal_complement(chi));
    return bra.dot(h.matrix() * ket);
}

double h_max(const CanonicalForm &cf) {
    return cf.mu(0) + cf.mu(1);
}

double optimal_p0(const EntanglementMeasure &measure) {
    constexpr double lo0 = 1e-6;
    constexpr double hi0 = 0.5 - 1e-6;
    constexpr int max_iter = 200;
    constexpr double xtol = 1e-12;

    if (measure.second_derivative) {
        double d_lo = rate_factor_f_derivative(lo0, measure);
        double d_hi = rate_factor_f_derivative(hi0, measure);
        if (d_lo <= 0) {
            throw Error(ErrorCode::NoInteriorMaximum, "optimal_p0: rate factor does not increase away from P = 0");
        }
        if (d_hi > 0) {
            // Increasing across the whole bracket: the maximum sits at P = 1/2.
            return 0.5;
        }
        double lo = lo0, hi = hi0;
        for (int it = 0; it < max_iter && hi - lo > xtol; it++) {
            double mid = 0.5 * (lo + hi);
            if (rate_factor_f_derivative(mid, measure) > 0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    }

    // Golden-section search on f itself.
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double a = lo0, b = 0.5;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = rate_factor_f(c, measure);
    double fd = rate_factor_f(d, measure);
    for (int it = 0; it < max_iter && b - a > xtol; it++) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = rate_factor_f(c, measure);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = rate_factor_f(d, measure);
        }
    }
    double p = 0.5 * (a + b);
    if (rate_factor_f(p, measure) <= rate_factor_f(lo0, measure)) {
        throw Error(ErrorCode::NoInteriorMaximum, "optimal_p0: no maximum of the rate factor found");
    }
    return p;
}

PureState optimal_state(const CanonicalForm &cf, double p) {
    if (!(p >= 0.0 && p <= 0.5)) {
        throw Error(ErrorCode::OutOfDomain, "optimal_state: P must lie in [0, 1/2]");
    }
    ComplexVector canon = ComplexVector::Zero(4);
    const Complex i(0, 1);
    if (cf.det_sign >= 0) {
        canon(1) = std::sqrt(p);          // |0,1>
        canon(2) = i * std::sqrt(1 - p);  // |1,0>
    } else {
        canon(0) = std::sqrt(p);          // |0,0>
        canon(3) = i * std::sqrt(1 - p);  // |1,1>
    }
    return PureState(2, 2, cf.frame() * canon);
}

Complex schmidt_matrix_element(const SchmidtDecomposition &sd, const ComplexMatrix &h) {
    ComplexVector small = kron(ComplexVector(sd.left_vectors.col(1)), ComplexVector(sd.right_vectors.col(1)));
    ComplexVector large = kron(ComplexVector(sd.left_vectors.col(0)), ComplexVector(sd.right_vectors.col(0)));
    return small.dot(h * large);
}

namespace {

struct TwoLevelRateData {
    double p;
    double im_element;
    bool degenerate;
};

TwoLevelRateData rate_data(const PureState &state, const TwoQubitHamiltonian &h) {
    if (state.dim_a != 2 || state.dim_b != 2) {
        throw Error(ErrorCode::InvalidArgument, "two-qubit state expected");
    }
    SchmidtDecomposition sd = schmidt_decompose(state);
    double p = std::clamp(sd.min_coefficient(), 0.0, 0.5);
    bool degenerate = sd.coefficients[0] - sd.coefficients[1] <= default_tolerances().degenerate_schmidt;
    return {p, schmidt_matrix_element(sd, h.matrix()).imag(), degenerate};
}

}  // namespace

FlaggedValue dp_dt(const PureState &state, const TwoQubitHamiltonian &h) {
    TwoLevelRateData d = rate_data(state, h);
    return {2 * std::sqrt(d.p * (1 - d.p)) * d.im_element, d.degenerate};
}

FlaggedValue rate_gamma(const PureState &state, const TwoQubitHamiltonian &h, const EntanglementMeasure &measure) {
    TwoLevelRateData d = rate_data(state, h);
    return {rate_factor_f(d.p, measure) * d.im_element, d.degenerate};
}

double closed_form_p(double t, double h_max, double phi0) {
    double s = std::sin(h_max * t + phi0);
    return s * s;
}

std::vector<std::pair<double, double>> e_max_curve(const std::vector<double> &t_grid, double h_max, double phi0,
                                                   const EntanglementMeasure &measure) {
    std::vector<std::pair<double, double>> out;
    const double t_peak = h_max > 0 ? (std::numbers::pi / 4 - phi0) / h_max : INFINITY;
    for (double t : t_grid) {
        if (t > t_peak + 1e-15) {
            break;
        }
        double p = std::min(closed_form_p(t, h_max, phi0), 0.5);
        out.emplace_back(t, measure.value(p));
    }
    return out;
}

double invert_measure(double e, const EntanglementMeasure &measure) {
    double e_top = measure.value(0.5);
    if (!(e >= 0.0 && e <= e_top + 1e-12)) {
        throw Error(ErrorCode::OutOfDomain, "invert_measure: entanglement outside the measure's range");
    }
    if (e <= 0) {
        return 0;
    }
    if (e >= e_top) {
        return 0.5;
    }
    double lo = 0, hi = 0.5;
    for (int it = 0; it < 200 && hi - lo > 1e-14; it++) {
        double mid = 0.5 * (lo + hi);
        if (measure.value(mid) < e) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

CapabilityReport analyze_capability(const TwoQubitHamiltonian &h, const EntanglementMeasure &measure) {
    PauliCoefficients coeffs = pauli_decompose(h);
    CanonicalForm cf = canonical_form(coeffs);

    CapabilityReport r;
    r.mu = cf.mu;
    r.det_sign = cf.det_sign;
    r.h_max = h_max(cf);
    r.h_tilde_max = h_tilde_max(cf);
    r.p0 = optimal_p0(measure);
    r.e_at_p0 = measure.value(r.p0);
    r.f_at_p0 = rate_factor_f(r.p0, measure);
    r.gamma_max = r.f_at_p0 * r.h_max;
    try {
        r.tau_h = timescale(h);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::DegenerateSpectrum) {
            throw;
        }
    }
    r.dropped_local_terms = {coeffs.alpha, coeffs.beta, coeffs.trace_part};
    return r;
}

}  // namespace entcap
