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

#include "entcap/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entcap/errors.hpp"

namespace entcap {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitianInput:
            return "NonHermitianInput";
        case ErrorCode::DegenerateSpectrum:
            return "DegenerateSpectrum";
        case ErrorCode::NotSpecialOrthogonal:
            return "NotSpecialOrthogonal";
        case ErrorCode::OutOfDomain:
            return "OutOfDomain";
        case ErrorCode::NoInteriorMaximum:
            return "NoInteriorMaximum";
        case ErrorCode::StepTooLarge:
            return "StepTooLarge";
        case ErrorCode::ZeroCoupling:
            return "ZeroCoupling";
        case ErrorCode::DegenerateSchmidt:
            return "DegenerateSchmidt";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

const Tolerances &default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

PureState::PureState(int dim_a, int dim_b, ComplexVector amps)
    : dim_a(dim_a), dim_b(dim_b), amplitudes(std::move(amps)) {
    if (dim_a <= 0 || dim_b <= 0 || amplitudes.size() != dim_a * dim_b) {
        throw Error(ErrorCode::InvalidArgument, "PureState: amplitude count does not match dimensions");
    }
    if (std::abs(amplitudes.norm() - 1.0) > 1e-10) {
        throw Error(ErrorCode::InvalidArgument, "PureState: state is not normalized");
    }
}

ComplexMatrix PureState::coefficient_matrix() const {
    ComplexMatrix m(dim_a, dim_b);
    for (int a = 0; a < dim_a; a++) {
        for (int b = 0; b < dim_b; b++) {
            m(a, b) = amplitudes(a * dim_b + b);
        }
    }
    return m;
}

PureState PureState::from_coefficient_matrix(const ComplexMatrix &m) {
    ComplexVector v(m.rows() * m.cols());
    for (int a = 0; a < m.rows(); a++) {
        for (int b = 0; b < m.cols(); b++) {
            v(a * m.cols() + b) = m(a, b);
        }
    }
    return PureState(static_cast<int>(m.rows()), static_cast<int>(m.cols()), std::move(v));
}

PureState SchmidtDecomposition::reassemble() const {
    ComplexMatrix m = ComplexMatrix::Zero(left_vectors.rows(), right_vectors.rows());
    for (size_t n = 0; n < coefficients.size(); n++) {
        m += std::sqrt(coefficients[n]) * left_vectors.col(n) * right_vectors.col(n).transpose();
    }
    return PureState::from_coefficient_matrix(m);
}

const ComplexMatrix &pauli(int k) {
    static const std::array<ComplexMatrix, 4> table = [] {
        const Complex i(0, 1);
        std::array<ComplexMatrix, 4> t;
        for (auto &m : t) {
            m = ComplexMatrix::Zero(2, 2);
        }
        t[0] << 1, 0, 0, 1;
        t[1] << 0, 1, 1, 0;
        t[2] << 0, -i, i, 0;
        t[3] << 1, 0, 0, -1;
        return t;
    }();
    if (k < 0 || k > 3) {
        throw Error(ErrorCode::InvalidArgument, "pauli: index must be 0..3");
    }
    return table[k];
}

ComplexMatrix identity(int n) {
    return ComplexMatrix::Identity(n, n);
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); i++) {
        for (int j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.size() * b.size());
    for (int i = 0; i < a.size(); i++) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

bool is_hermitian(const ComplexMatrix &m, const Tolerances &tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    return defect <= tol.hermitian * scale;
}

void require_hermitian(const ComplexMatrix &m, const Tolerances &tol) {
    if (!is_hermitian(m, tol)) {
        std::ostringstream ss;
        ss << "matrix of size " << m.rows() << "x" << m.cols() << " is not Hermitian";
        throw Error(ErrorCode::NonHermitianInput, ss.str());
    }
}

double unitarity_defect(const ComplexMatrix &u) {
    return (u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

Eigensystem hermitian_eigensystem(const ComplexMatrix &m, const Tolerances &tol) {
    require_hermitian(m, tol);
    // Symmetrize so round-off in the input cannot leak into the solver.
    ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix unitary_evolution(const ComplexMatrix &h, double t, const Tolerances &tol) {
    Eigensystem es = hermitian_eigensystem(h, tol);
    ComplexVector phases(es.values.size());
    for (int k = 0; k < es.values.size(); k++) {
        phases(k) = std::exp(Complex(0, -es.values(k) * t));
    }
    return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

PureState apply(const ComplexMatrix &u, const PureState &state) {
    ComplexVector out = u * state.amplitudes;
    return PureState(state.dim_a, state.dim_b, std::move(out));
}

ComplexMatrix partial_trace(const PureState &state, Subsystem keep) {
    ComplexMatrix c = state.coefficient_matrix();
    if (keep == Subsystem::A) {
        return c * c.adjoint();
    }
    return (c.adjoint() * c).transpose();
}

SchmidtDecomposition schmidt_decompose(const PureState &state) {
    ComplexMatrix c = state.coefficient_matrix();
    Eigen::JacobiSVD<ComplexMatrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto &s = svd.singularValues();
    int rank = static_cast<int>(s.size());

    SchmidtDecomposition out;
    // c = U S V^dagger  =>  psi = sum_k s_k |U_k> (x) |conj(V_k)>
    out.left_vectors = svd.matrixU();
    out.right_vectors = svd.matrixV().conjugate();
    out.coefficients.resize(rank);
    double total = 0;
    for (int k = 0; k < rank; k++) {
        out.coefficients[k] = s(k) * s(k);
        total += out.coefficients[k];
    }
    for (double &x : out.coefficients) {
        x /= total;
    }
    return out;
}

SpecialSvd3 svd3_special(const RealMatrix3 &g) {
    Eigen::JacobiSVD<RealMatrix3> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
    RealMatrix3 u = svd.matrixU();
    RealMatrix3 v = svd.matrixV();
    SpecialSvd3 out;
    out.sigma = svd.singularValues();
    if (u.determinant() < 0) {
        u.col(2) *= -1;
        out.third_sign *= -1;
    }
    if (v.determinant() < 0) {
        v.col(2) *= -1;
        out.third_sign *= -1;
    }
    out.o_a = u;
    out.o_b = v.transpose();
    double scale = std::max(1.0, out.sigma(0));
    bool singular = out.sigma(2) <= 1e-12 * scale;
    out.det_sign = singular ? 1 : out.third_sign;
    return out;
}

double operator_norm(const ComplexMatrix &m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

}  // namespace entcap
