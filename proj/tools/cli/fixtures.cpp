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

#include "cli/fixtures.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "entcap/ancilla.hpp"
#include "entcap/capability.hpp"
#include "entcap/protocol.hpp"

namespace entcap::cli {

namespace {

std::string sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0 ? 0.0 : x);
    return buf;
}

}  // namespace

std::vector<VerifyRow> verify_rows(const TwoQubitHamiltonian &h, const SearchConfig &cfg, double corrupt_analytic) {
    const CanonicalForm cf = canonical_form(h);
    const EntanglementMeasure measure = entropy_measure();
    const double hm = h_max(cf);
    const double htm = h_tilde_max(cf);
    const double scale = std::max(1.0, hm);
    std::vector<VerifyRow> rows;

    HMaxSearch hs = brute_force_h_max(h, cfg);
    double analytic_h = hm + corrupt_analytic;
    rows.push_back({"h_max", analytic_h, hs.value, std::abs(hs.value - analytic_h), 1e-4 * scale});

    HTildeSearch ts = brute_force_h_tilde(h, cfg);
    rows.push_back({"h_tilde_max_bell", htm, ts.bell_family, std::abs(ts.bell_family - htm),
                    1e-3 * std::max(1.0, htm)});
    // The general search may only approach the bound from below.
    rows.push_back({"h_tilde_max_general", htm, ts.general, std::max(0.0, ts.general - htm), 1e-6 * std::max(1.0, htm)});

    const double p0 = optimal_p0(measure);
    const double e0 = measure.value(p0);
    RateSearch rs = brute_force_rate_at_e(h, e0, measure, cfg);
    double gamma = rate_factor_f(p0, measure) * hm;
    rows.push_back({"gamma_max", gamma, rs.rate, std::abs(rs.rate - gamma), 1e-3 * std::max(1e-12, gamma)});

    PureState state = optimal_state(cf, 0.25);
    FiniteDifference fd = finite_difference_check(state, h, cfg.fd_epsilon);
    double closed = 2 * std::sqrt(0.25 * 0.75) * hm;
    rows.push_back({"dp_dt_at_p_0.25", closed, fd.dp_dt_fd, std::abs(fd.dp_dt_fd - closed), 1e-5 * scale});
    return rows;
}

std::string verify_table_csv(const std::vector<VerifyRow> &rows) {
    std::ostringstream out;
    out << "quantity,analytic,oracle,residual,tolerance,status\n";
    for (const auto &r : rows) {
        out << r.quantity << ',' << sig12(r.analytic) << ',' << sig12(r.oracle) << ',' << sig12(r.residual) << ','
            << sig12(r.tolerance) << ',' << (r.pass() ? "PASS" : "FAIL") << '\n';
    }
    return out.str();
}

std::vector<NamedHamiltonian> fixture_hamiltonians() {
    std::vector<NamedHamiltonian> out;
    out.push_back({"ising", models::ising()});
    out.push_back({"heisenberg", models::heisenberg()});
    out.push_back({"xy", models::xy()});
    out.push_back({"couplings_1_0.5_0.25", models::from_couplings(1, 0.5, 0.25)});
    PauliCoefficients neg;
    neg.gamma.diagonal() << 1, -0.5, 0.25;
    neg.alpha << 0.3, 0, -0.2;
    out.push_back({"negative_det_with_fields", make_hamiltonian(neg)});
    for (std::uint64_t seed = 1; seed <= 5; seed++) {
        TwoQubitHamiltonian h(random_hermitian(seed));
        double hm = h_max(canonical_form(h));
        out.push_back({"random_" + std::to_string(seed), h.scaled(1 / hm)});
    }
    return out;
}

SearchConfig fixture_search_config() {
    SearchConfig cfg;
    cfg.restarts = 16;
    return cfg;
}

std::string oracle_fixtures_table() {
    std::ostringstream out;
    out << "# name quantity analytic oracle residual\n";
    const SearchConfig cfg = fixture_search_config();
    for (const auto &[name, h] : fixture_hamiltonians()) {
        for (const VerifyRow &r : verify_rows(h, cfg)) {
            out << name << ' ' << r.quantity << ' ' << sig12(r.analytic) << ' ' << sig12(r.oracle) << ' '
                << sig12(r.residual) << '\n';
        }
    }
    return out.str();
}

}  // namespace entcap::cli
