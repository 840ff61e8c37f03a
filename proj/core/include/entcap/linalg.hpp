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

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace entcap {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix3 = Eigen::Matrix3d;
using RealVector3 = Eigen::Vector3d;

/// Numerical thresholds shared by the whole library.
struct Tolerances {
    double hermitian = 1e-12;       // relative, scaled by max(1, max|M|)
    double norm = 1e-12;            // |<psi|psi> - 1|
    double special_orthogonal = 1e-10;
    double degenerate_spectrum = 1e-12;
    double degenerate_schmidt = 1e-9;
};

const Tolerances &default_tolerances();

enum class Subsystem { A, B };

/// Normalized bipartite pure state. Amplitude index is a * dim_b + b.
struct PureState {
    int dim_a = 2;
    int dim_b = 2;
    ComplexVector amplitudes;

    PureState() = default;
    PureState(int dim_a, int dim_b, ComplexVector amplitudes);

    /// Reshapes into a dim_a x dim_b coefficient matrix.
    ComplexMatrix coefficient_matrix() const;
    static PureState from_coefficient_matrix(const ComplexMatrix &m);
};

/// Schmidt data with coefficients (squared weights) in descending order:
///     |psi> = sum_n sqrt(coefficients[n]) |left_n> (x) |right_n>
/// Columns of left_vectors / right_vectors are the Schmidt vectors. Both sets
/// are completed to full orthonormal bases when the rank is deficient.
struct SchmidtDecomposition {
    std::vector<double> coefficients;
    ComplexMatrix left_vectors;
    ComplexMatrix right_vectors;

    /// Smallest coefficient; for two qubits this is P <= 1/2.
    double min_coefficient() const {
        return coefficients.back();
    }
    PureState reassemble() const;
};

struct Eigensystem {
    Eigen::VectorXd values;  // ascending
    ComplexMatrix vectors;   // columns
};

struct SpecialSvd3 {
    RealMatrix3 o_a;
    RealVector3 sigma;  // s1 >= s2 >= s3 >= 0
    RealMatrix3 o_b;
    int det_sign = 1;
    /// g == o_a * diag(sigma[0], sigma[1], third_sign * sigma[2]) * o_b
    int third_sign = 1;
};

const ComplexMatrix &pauli(int k);  // k = 0 (identity), 1, 2, 3
ComplexMatrix identity(int n);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);

bool is_hermitian(const ComplexMatrix &m, const Tolerances &tol = default_tolerances());
void require_hermitian(const ComplexMatrix &m, const Tolerances &tol = default_tolerances());
double unitarity_defect(const ComplexMatrix &u);

Eigensystem hermitian_eigensystem(const ComplexMatrix &m, const Tolerances &tol = default_tolerances());

/// exp(-i h t), assembled from the eigensystem of h.
ComplexMatrix unitary_evolution(const ComplexMatrix &h, double t, const Tolerances &tol = default_tolerances());

PureState apply(const ComplexMatrix &u, const PureState &state);

ComplexMatrix partial_trace(const PureState &state, Subsystem keep);

SchmidtDecomposition schmidt_decompose(const PureState &state);

SpecialSvd3 svd3_special(const RealMatrix3 &g);

/// Spectral norm (largest singular value).
double operator_norm(const ComplexMatrix &m);

}  // namespace entcap
