// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qhl/errors.hpp"

namespace qhl {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Qubit ordering convention used everywhere in this project: qubit 0 is the
// most significant bit of the basis index. A basis index b of an n-qubit
// register therefore reads (q0 q1 ... q_{n-1}) in binary, q0 first.

constexpr double kUnitaryTol = 1e-12;
constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;

/// A pure state of `num_qubits` qubits, normalized to unit 2-norm.
struct StateVector {
  int num_qubits = 0;
  ComplexVector amplitudes;

  Eigen::Index dim() const { return amplitudes.size(); }
};

/// Hermitian, unit-trace, positive-semidefinite operator on 2^num_qubits dims.
struct DensityMatrix {
  int num_qubits = 0;
  ComplexMatrix matrix;

  Eigen::Index dim() const { return matrix.rows(); }
};

// ---- construction & validation ----

StateVector make_state(int num_qubits, ComplexVector amplitudes);
StateVector basis_state(int num_qubits, Eigen::Index index);
DensityMatrix make_density(int num_qubits, ComplexMatrix m,
                           bool check_psd = true);
DensityMatrix density_from_state(const StateVector& psi);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTol);
/// ‖U†U − I‖_op.
double unitarity_residual(const ComplexMatrix& m);

// ---- elementary operations ----

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron_vec(const ComplexVector& a, const ComplexVector& b);

/// Operator on 2n qubits exchanging two n-qubit registers:
/// S |x>|y> = |y>|x>. Hermitian involution.
ComplexMatrix swap_operator(int n);

/// e^{-i t h} for Hermitian h, via eigendecomposition.
ComplexMatrix matrix_exp_hermitian(const ComplexMatrix& h, double t);

/// |0><0| (x) I + |1><1| (x) e^{-i t h}: the h-register evolution gated on
/// one control qubit prepended as the most significant wire.
ComplexMatrix controlled_exp_hermitian(const ComplexMatrix& h, double t);

/// Reduced matrix over the kept qubits (ascending order preserved).
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<int>& keep, int total_qubits);

// ---- norms & distances ----

/// Largest singular value.
double op_norm(const ComplexMatrix& m);
/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// min over real phi of ‖a − e^{i phi} b‖_op. Closed form for 2x2 unitaries,
/// coarse-scan plus golden-section refinement otherwise.
double phase_invariant_distance(const ComplexMatrix& a,
                                const ComplexMatrix& b);

}  // namespace qhl
