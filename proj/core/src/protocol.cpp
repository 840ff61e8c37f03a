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

#include "entcap/protocol.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "entcap/ancilla.hpp"
#include "entcap/errors.hpp"

namespace entcap {

void validate_protocol_config(const TwoQubitHamiltonian &h, const ProtocolConfig &cfg) {
    if (!(cfg.dt > 0) || !(cfg.t_end >= cfg.dt)) {
        throw Error(ErrorCode::InvalidArgument, "protocol config: require 0 < dt <= t_end");
    }
    if (cfg.mode == ProtocolMode::TwoQubit && !(cfg.initial_p >= 0 && cfg.initial_p <= 0.5)) {
        throw Error(ErrorCode::InvalidArgument, "protocol config: initial P must lie in [0, 1/2]");
    }
    if (cfg.mode == ProtocolMode::Ancilla && !(cfg.initial_p > 0 && cfg.initial_p < 1)) {
        throw Error(ErrorCode::InvalidArgument, "protocol config: initial lambda_1 must lie in (0, 1)");
    }
    double tau;
    try {
        tau = timescale(h);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::DegenerateSpectrum) {
            return;  // no dynamics, any step is short enough
        }
        throw;
    }
    if (cfg.dt > 0.01 * tau) {
        std::ostringstream ss;
        ss.imbue(std::locale::classic());
        ss << "protocol config: dt = " << cfg.dt << " exceeds 0.01 * tau_H = " << 0.01 * tau;
        throw Error(ErrorCode::StepTooLarge, ss.str());
    }
}

Restoration restore_optimal(const PureState &state, const CanonicalForm &cf) {
    SchmidtDecomposition sd = schmidt_decompose(state);
    double p = std::clamp(sd.min_coefficient(), 0.0, 0.5);
    SchmidtDecomposition target = schmidt_decompose(optimal_state(cf, p));
    // Map each Schmidt vector onto the corresponding one of the target.
    ComplexMatrix u_a = target.left_vectors * sd.left_vectors.adjoint();
    ComplexMatrix v_b = target.right_vectors * sd.right_vectors.adjoint();
    PureState restored = entcap::apply(kron(u_a, v_b), state);
    return {std::move(restored), std::move(u_a), std::move(v_b)};
}

namespace {

int step_count(const ProtocolConfig &cfg) {
    return static_cast<int>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
}

double norm_defect(const PureState &s) {
    return std::abs(s.amplitudes.norm() - 1.0);
}

}  // namespace

ProtocolTrace run_optimal_protocol(const TwoQubitHamiltonian &h, const ProtocolConfig &cfg) {
    validate_protocol_config(h, cfg);
    if (cfg.mode != ProtocolMode::TwoQubit) {
        throw Error(ErrorCode::InvalidArgument, "run_optimal_protocol: two-qubit mode expected");
    }
    const CanonicalForm cf = canonical_form(h);
    const double hm = h_max(cf);
    const double phi0 = std::asin(std::sqrt(cfg.initial_p));
    const ComplexMatrix step = unitary_evolution(h.matrix(), cfg.dt);

    ProtocolTrace trace;
    PureState state = optimal_state(cf, cfg.initial_p);
    auto record = [&](double t, double p) {
        ProtocolRecord r;
        r.t = t;
        r.p = p;
        r.e = cfg.measure.value(p);
        r.gamma = rate_gamma(state, h, cfg.measure).value;
        r.deviation = std::abs(p - smaller_weight_reference(t, hm, phi0));
        trace.records.push_back(r);
    };
    record(0.0, cfg.initial_p);

    double p_prev = cfg.initial_p;
    const int steps = step_count(cfg);
    for (int k = 1; k <= steps; k++) {
        state = entcap::apply(step, state);
        trace.max_norm_defect = std::max(trace.max_norm_defect, norm_defect(state));
        double p = std::clamp(schmidt_decompose(state).min_coefficient(), 0.0, 0.5);
        if (hm > 0 && p < p_prev - 1e-12) {
            break;  // passed the first maximum during this step
        }

        Restoration r = restore_optimal(state, cf);
        double p_after = schmidt_decompose(r.state).min_coefficient();
        trace.max_restoration_change = std::max(trace.max_restoration_change, std::abs(p_after - p));
        state = std::move(r.state);

        record(k * cfg.dt, p);
        trace.total_steps = k;
        if (hm > 0 && p >= 0.5 - 1e-12) {
            break;  // first maximum reached
        }
        p_prev = p;
    }
    return trace;
}

double smaller_weight_reference(double t, double h_max, double phi0) {
    double c = closed_form_p(t, h_max, phi0);
    return std::min(c, 1 - c);
}

double equal_tail_closed_form_p(double t, double h_tilde_max, double x0) {
    double s = std::sin(x0 - h_tilde_max * t / std::sqrt(3.0));
    return s * s;
}

ProtocolTrace run_ancilla_protocol(const TwoQubitHamiltonian &h, const ProtocolConfig &cfg) {
    validate_protocol_config(h, cfg);
    if (cfg.mode != ProtocolMode::Ancilla) {
        throw Error(ErrorCode::InvalidArgument, "run_ancilla_protocol: ancilla mode expected");
    }
    const CanonicalForm cf = canonical_form(h);
    const double htm = h_tilde_max(cf);
    const double x0 = std::asin(std::sqrt(cfg.initial_p));
    const ComplexMatrix h_total = embed_qubit_hamiltonian(h.matrix());
    const ComplexMatrix step = unitary_evolution(h_total, cfg.dt);

    ProtocolTrace trace;
    MultilevelSchmidtState config = bell_configuration(cf, cfg.initial_p);
    PureState state = config.to_state();
    auto record = [&](double t, const std::vector<double> &lambdas) {
        ProtocolRecord r;
        r.t = t;
        r.p = lambdas[0];
        r.e = entropy_of_spectrum(lambdas);
        r.gamma = multilevel_rate(config, h_total).value;
        r.deviation = std::abs(r.p - equal_tail_closed_form_p(t, htm, x0));
        trace.records.push_back(r);
    };
    record(0.0, config.lambdas);

    double p_prev = cfg.initial_p;
    const int steps = step_count(cfg);
    for (int k = 1; k <= steps; k++) {
        state = entcap::apply(step, state);
        trace.max_norm_defect = std::max(trace.max_norm_defect, norm_defect(state));
        SchmidtDecomposition sd = schmidt_decompose(state);
        const auto &l = sd.coefficients;
        auto [lo, hi] = std::minmax_element(l.begin() + 1, l.end());
        trace.tail_drift.push_back(*hi - *lo);

        // Re-impose the equal-tail Bell configuration at the measured lambda_1.
        // Equalizing the tail is not a local operation; the drift above
        // records how far the evolved state was from it.
        double p = l[0];
        if (htm > 0 && p > p_prev + 1e-12) {
            break;  // passed the equal-weight point during this step
        }
        config = bell_configuration(cf, p);
        state = config.to_state();
        trace.max_restoration_change = std::max(trace.max_restoration_change, std::abs(config.lambdas[0] - p));

        record(k * cfg.dt, sd.coefficients);
        trace.total_steps = k;
        if (htm > 0 && p <= 0.25 + 1e-12) {
            break;  // maximal entanglement reached
        }
        p_prev = p;
    }
    return trace;
}

ProtocolTrace run_protocol(const TwoQubitHamiltonian &h, const ProtocolConfig &cfg) {
    return cfg.mode == ProtocolMode::Ancilla ? run_ancilla_protocol(h, cfg) : run_optimal_protocol(h, cfg);
}

double verify_trace(const ProtocolTrace &trace, double h_max, double phi0) {
    double worst = 0;
    for (const auto &r : trace.records) {
        worst = std::max(worst, std::abs(r.p - smaller_weight_reference(r.t, h_max, phi0)));
    }
    return worst;
}

std::string plain_decimal(double x) {
    if (x == 0 || !std::isfinite(x)) {
        return x == 0 ? "0" : (std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf"));
    }
    int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
    int precision = std::max(0, 11 - exponent);
    std::array<char, 512> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::fixed, precision);
    std::string s(buf.data(), res.ptr);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') {
            s.pop_back();
        }
        if (s.back() == '.') {
            s.pop_back();
        }
    }
    return s;
}

void write_trace_csv(std::ostream &out, const ProtocolTrace &trace) {
    std::string text = "t,P,E,gamma,deviation\n";
    for (const auto &r : trace.records) {
        text += plain_decimal(r.t) + ',' + plain_decimal(r.p) + ',' + plain_decimal(r.e) + ',' +
                plain_decimal(r.gamma) + ',' + plain_decimal(r.deviation) + '\n';
    }
    out << text;
}

}  // namespace entcap
