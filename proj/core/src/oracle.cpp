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

#include "entcap/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "entcap/errors.hpp"

namespace entcap {

namespace {

using Params = std::vector<double>;
using Objective = std::function<double(const Params &)>;

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

// Derivative-free pattern search: try +-step along each coordinate, halve the
// step when nothing improves.
double coordinate_ascent(const Objective &f, Params &x, double step, int iters) {
    double best = f(x);
    for (int it = 0; it < iters && step > 1e-13; it++) {
        bool improved = false;
        for (std::size_t i = 0; i < x.size(); i++) {
            for (double dir : {1.0, -1.0}) {
                double saved = x[i];
                x[i] = saved + dir * step;
                double v = f(x);
                if (v > best) {
                    best = v;
                    improved = true;
                    break;
                }
                x[i] = saved;
            }
        }
        if (!improved) {
            step *= 0.5;
        }
    }
    return best;
}

// Restarts the pattern search from its own result until it stops improving;
// shakes the search loose from ridges that are not axis-aligned.
double polish(const Objective &f, Params &x, double step, int iters) {
    double best = coordinate_ascent(f, x, step, iters);
    for (int round = 0; round < 8; round++) {
        double v = coordinate_ascent(f, x, step, iters);
        if (!(v > best)) {
            break;
        }
        best = v;
    }
    return best;
}

ComplexVector bloch(double theta, double phi) {
    ComplexVector v(2);
    v << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
    return v;
}

ComplexVector perp(const ComplexVector &v) {
    ComplexVector w(2);
    w << -std::conj(v(1)), std::conj(v(0));
    return w;
}

// Rz(a) Ry(b) Rz(c)
ComplexMatrix euler_su2(double a, double b, double c) {
    auto rz = [](double x) {
        ComplexMatrix m = ComplexMatrix::Zero(2, 2);
        m(0, 0) = std::polar(1.0, -x / 2);
        m(1, 1) = std::polar(1.0, x / 2);
        return m;
    };
    ComplexMatrix ry(2, 2);
    ry << std::cos(b / 2), -std::sin(b / 2), std::sin(b / 2), std::cos(b / 2);
    return rz(a) * ry * rz(c);
}

ComplexMatrix random_unitary(std::mt19937_64 &rng, int dim) {
    std::normal_distribution<double> g;
    ComplexMatrix z(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            z(i, j) = Complex(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; j++) {
        Complex d = r(j, j);
        if (std::abs(d) > 0) {
            q.col(j) *= d / std::abs(d);
        }
    }
    return q;
}

double h_objective(const ComplexMatrix &h, const Params &x) {
    ComplexVector phi = bloch(x[0], x[1]);
    ComplexVector chi = bloch(x[2], x[3]);
    ComplexVector bra = kron(phi, chi);
    ComplexVector ket = kron(perp(phi), perp(chi));
    return std::abs(bra.dot(h * ket));
}

// A 4-level basis vector on qubit (x) ancilla stored as a 2x2 matrix
// M[qubit][ancilla]. With that layout
//   <phi_1 chi_1| H (x) 1 |phi_n chi_n> = Tr(H (Phi_n Phi_1^dag (x) X_n X_1^dag)).
using LevelBasis = std::array<ComplexMatrix, 4>;

double tail_sum(const ComplexMatrix &h, const LevelBasis &phis, const LevelBasis &chis) {
    double total = 0;
    for (int n = 1; n < 4; n++) {
        ComplexMatrix k = kron(ComplexMatrix(phis[n] * phis[0].adjoint()), ComplexMatrix(chis[n] * chis[0].adjoint()));
        total += std::abs((h * k).trace());
    }
    return total;
}

LevelBasis bell_basis() {
    const double s = 1 / std::numbers::sqrt2;
    LevelBasis b;
    for (auto &m : b) {
        m = ComplexMatrix::Zero(2, 2);
    }
    b[0](0, 0) = s, b[0](1, 1) = s;   // phi+
    b[1](0, 1) = s, b[1](1, 0) = s;   // psi+
    b[2](0, 1) = s, b[2](1, 0) = -s;  // psi-
    b[3](0, 0) = s, b[3](1, 1) = -s;  // phi-
    return b;
}

LevelBasis twirl(const LevelBasis &base, const ComplexMatrix &uq, const ComplexMatrix &uanc,
                 const std::array<int, 4> &order) {
    LevelBasis out;
    for (int n = 0; n < 4; n++) {
        out[n] = uq * base[order[n]] * uanc.transpose();
    }
    return out;
}

LevelBasis columns_as_basis(const ComplexMatrix &u) {
    LevelBasis out;
    for (int n = 0; n < 4; n++) {
        out[n] = ComplexMatrix(2, 2);
        for (int q = 0; q < 2; q++) {
            for (int a = 0; a < 2; a++) {
                out[n](q, a) = u(q * 2 + a, n);
            }
        }
    }
    return out;
}

// Hermitian generators of u(4) used for the general-basis refinement.
const std::vector<ComplexMatrix> &u4_generators() {
    static const std::vector<ComplexMatrix> gens = [] {
        std::vector<ComplexMatrix> g;
        for (int a = 0; a < 4; a++) {
            for (int b = 0; b < 4; b++) {
                if (a || b) {
                    g.push_back(kron(pauli(a), pauli(b)));
                }
            }
        }
        return g;
    }();
    return gens;
}

// exp(i s P) for a Pauli product P (P^2 = 1).
ComplexMatrix exp_i_pauli(const ComplexMatrix &p, double s) {
    return std::cos(s) * ComplexMatrix::Identity(p.rows(), p.cols()) + Complex(0, std::sin(s)) * p;
}

double smaller_weight(const PureState &state) {
    ComplexMatrix c = state.coefficient_matrix();
    ComplexMatrix rho = c * c.adjoint();
    double det = (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
    double disc = std::max(0.0, 1 - 4 * det);
    return (1 - std::sqrt(disc)) / 2;
}

}  // namespace

void validate_search_config(const SearchConfig &cfg) {
    if (cfg.grid_resolution < 2 || cfg.restarts < 1 || cfg.refine_iters < 1 || !(cfg.fd_epsilon > 0)) {
        throw Error(ErrorCode::InvalidArgument, "search configuration values must be positive (grid >= 2)");
    }
}

HMaxSearch brute_force_h_max(const TwoQubitHamiltonian &h, const SearchConfig &cfg) {
    validate_search_config(cfg);
    const ComplexMatrix &m = h.matrix();
    const int n = cfg.grid_resolution;
    const double pi = std::numbers::pi;

    Params best_x{0, 0, 0, 0};
    double best = -1;
    Params x(4);
    for (int i0 = 0; i0 < n; i0++) {
        x[0] = pi * i0 / (n - 1);
        for (int i1 = 0; i1 < n; i1++) {
            x[1] = 2 * pi * i1 / n;
            for (int i2 = 0; i2 < n; i2++) {
                x[2] = pi * i2 / (n - 1);
                for (int i3 = 0; i3 < n; i3++) {
                    x[3] = 2 * pi * i3 / n;
                    double v = h_objective(m, x);
                    if (v > best) {
                        best = v;
                        best_x = x;
                    }
                }
            }
        }
    }

    Objective f = [&m](const Params &p) { return h_objective(m, p); };
    best = coordinate_ascent(f, best_x, pi / n, cfg.refine_iters);
    for (int r = 0; r < cfg.restarts; r++) {
        auto rng = stream(cfg.seed, static_cast<std::uint64_t>(r));
        std::uniform_real_distribution<double> theta(0, pi), phase(0, 2 * pi);
        Params start{theta(rng), phase(rng), theta(rng), phase(rng)};
        double v = coordinate_ascent(f, start, pi / 4, cfg.refine_iters);
        if (v > best) {
            best = v;
            best_x = start;
        }
    }

    HMaxSearch out;
    out.value = best;
    out.phi = bloch(best_x[0], best_x[1]);
    out.chi = bloch(best_x[2], best_x[3]);
    return out;
}

HTildeSearch brute_force_h_tilde(const TwoQubitHamiltonian &h, const SearchConfig &cfg) {
    validate_search_config(cfg);
    const ComplexMatrix &m = h.matrix();
    const LevelBasis bell = bell_basis();
    const double pi = std::numbers::pi;
    HTildeSearch out;

    // Bell family: four local SU(2) twirls (12 Euler angles) and a pairing of
    // the Bell states between A and B.
    std::array<int, 4> id_order{0, 1, 2, 3};
    std::vector<std::array<int, 4>> pairings;
    std::array<int, 4> perm = id_order;
    do {
        pairings.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (int r = 0; r < cfg.restarts; r++) {
        auto rng = stream(cfg.seed, static_cast<std::uint64_t>(r));
        std::uniform_real_distribution<double> angle(0, 2 * pi);
        const auto &pairing = pairings[static_cast<std::size_t>(r) % pairings.size()];
        Objective f = [&](const Params &p) {
            LevelBasis a = twirl(bell, euler_su2(p[0], p[1], p[2]), euler_su2(p[3], p[4], p[5]), id_order);
            LevelBasis b = twirl(bell, euler_su2(p[6], p[7], p[8]), euler_su2(p[9], p[10], p[11]), pairing);
            return tail_sum(m, a, b);
        };
        Params x(12);
        if (r == 0) {
            std::fill(x.begin(), x.end(), 0.0);
        } else {
            for (double &v : x) {
                v = angle(rng);
            }
        }
        out.bell_family = std::max(out.bell_family, coordinate_ascent(f, x, pi / 4, cfg.refine_iters));
    }

    // General orthonormal bases: random unitaries refined along u(4)
    // generators on each side.
    const auto &gens = u4_generators();
    for (int r = 0; r < cfg.restarts; r++) {
        auto rng = stream(cfg.seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(r));
        ComplexMatrix ua = random_unitary(rng, 4);
        ComplexMatrix ub = random_unitary(rng, 4);
        double best = tail_sum(m, columns_as_basis(ua), columns_as_basis(ub));
        double step = 0.5;
        for (int it = 0; it < cfg.refine_iters && step > 1e-13; it++) {
            bool improved = false;
            for (std::size_t g = 0; g < 2 * gens.size(); g++) {
                const ComplexMatrix &gen = gens[g % gens.size()];
                ComplexMatrix &target = g < gens.size() ? ua : ub;
                for (double dir : {1.0, -1.0}) {
                    ComplexMatrix trial = exp_i_pauli(gen, dir * step) * target;
                    ComplexMatrix saved = target;
                    target = trial;
                    double v = tail_sum(m, columns_as_basis(ua), columns_as_basis(ub));
                    if (v > best) {
                        best = v;
                        improved = true;
                        break;
                    }
                    target = saved;
                }
            }
            if (!improved) {
                step *= 0.5;
            }
        }
        out.general = std::max(out.general, best);
    }
    return out;
}

FiniteDifference finite_difference_check(const PureState &state, const TwoQubitHamiltonian &h, double eps) {
    if (state.dim_a != 2 || state.dim_b != 2) {
        throw Error(ErrorCode::InvalidArgument, "finite_difference_check: two-qubit state required");
    }
    if (!(eps > 0)) {
        throw Error(ErrorCode::InvalidArgument, "finite_difference_check: eps must be positive");
    }
    double p = smaller_weight(state);
    if (std::abs(p - 0.5) < 1e-3) {
        throw Error(ErrorCode::DegenerateSchmidt, "finite_difference_check: Schmidt weights too close to 1/2");
    }
    PureState plus = entcap::apply(unitary_evolution(h.matrix(), eps), state);
    PureState minus = entcap::apply(unitary_evolution(h.matrix(), -eps), state);

    FiniteDifference out;
    out.dp_dt_fd = (smaller_weight(plus) - smaller_weight(minus)) / (2 * eps);
    out.dp_dt_analytic = dp_dt(state, h).value;
    out.residual = std::abs(out.dp_dt_fd - out.dp_dt_analytic);
    return out;
}

PureState RateSearch::state() const {
    ComplexVector base = ComplexVector::Zero(4);
    base(0) = std::sqrt(p);
    base(3) = std::sqrt(1 - p);
    return PureState(2, 2, kron(u_a, v_b) * base);
}

double rate_in_frame(const TwoQubitHamiltonian &h, double p, const ComplexMatrix &u, const ComplexMatrix &v,
                     const EntanglementMeasure &measure) {
    if (p <= 0 || p >= 1) {
        return 0;
    }
    ComplexVector small = kron(ComplexVector(u.col(0)), ComplexVector(v.col(0)));
    ComplexVector large = kron(ComplexVector(u.col(1)), ComplexVector(v.col(1)));
    double coupling = small.dot(h.matrix() * large).imag();
    // Which weight is the smaller one decides the sign of dP/dt.
    double sign = p <= 0.5 ? 1.0 : -1.0;
    double q = std::min(p, 1 - p);
    return measure.derivative(q) * 2 * std::sqrt(p * (1 - p)) * sign * coupling;
}

RateSearch brute_force_rate_at_e(const TwoQubitHamiltonian &h, double e, const EntanglementMeasure &measure,
                                 const SearchConfig &cfg) {
    validate_search_config(cfg);
    const double e_top = measure.value(0.5);
    if (!(e >= 0) || !(e < e_top)) {
        throw Error(ErrorCode::OutOfDomain, "brute_force_rate_at_e: require 0 <= e < E(1/2)");
    }
    RateSearch out;
    out.p = e == 0 ? 0.0 : invert_measure(e, measure);
    if (out.p <= 0) {
        return out;
    }
    const double pi = std::numbers::pi;
    Objective f = [&](const Params &x) {
        return rate_in_frame(h, out.p, euler_su2(x[0], x[1], x[2]), euler_su2(x[3], x[4], x[5]), measure);
    };
    Params best_x(6, 0.0);
    double best = f(best_x);
    for (int r = 0; r < cfg.restarts; r++) {
        auto rng = stream(cfg.seed, static_cast<std::uint64_t>(r));
        std::uniform_real_distribution<double> angle(0, 2 * pi);
        Params x(6);
        for (double &v : x) {
            v = angle(rng);
        }
        double v = coordinate_ascent(f, x, pi / 4, cfg.refine_iters);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    best = polish(f, best_x, pi / 64, cfg.refine_iters);
    out.rate = best;
    out.u_a = euler_su2(best_x[0], best_x[1], best_x[2]);
    out.v_b = euler_su2(best_x[3], best_x[4], best_x[5]);
    return out;
}

CanonicalDescriptor canonical_descriptor(const PureState &state, const TwoQubitHamiltonian &h) {
    CanonicalForm cf = canonical_form(h);
    double hm = h_max(cf);
    if (hm <= 0) {
        throw Error(ErrorCode::ZeroCoupling, "canonical_descriptor: H has no interaction");
    }
    SchmidtDecomposition sd = schmidt_decompose(state);
    ComplexVector phi_l = sd.left_vectors.col(0), chi_l = sd.right_vectors.col(0);
    ComplexVector phi_s = sd.left_vectors.col(1), chi_s = sd.right_vectors.col(1);
    ComplexVector phi_c = cf.u_a.adjoint() * phi_s;
    ComplexVector chi_c = cf.v_b.adjoint() * chi_s;
    auto z = [](const ComplexVector &v) { return std::norm(v(0)) - std::norm(v(1)); };
    Complex g = kron(phi_s, chi_s).dot(h.matrix() * kron(phi_l, chi_l)) / hm;

    CanonicalDescriptor d;
    d.abs_z_phi = std::abs(z(phi_c));
    d.z_product = z(phi_c) * z(chi_c);
    d.re_g = g.real();
    d.im_g = g.imag();
    return d;
}

double descriptor_distance(const CanonicalDescriptor &a, const CanonicalDescriptor &b) {
    return std::max({std::abs(a.abs_z_phi - b.abs_z_phi), std::abs(a.z_product - b.z_product),
                     std::abs(a.re_g - b.re_g), std::abs(a.im_g - b.im_g)});
}

ComplexMatrix random_hermitian(std::uint64_t seed, int dim) {
    auto rng = stream(seed, 0);
    std::normal_distribution<double> g;
    ComplexMatrix z(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            z(i, j) = Complex(g(rng), g(rng));
        }
    }
    return (z + z.adjoint()) / 2.0;
}

}  // namespace entcap
