// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0
//
// Hebbian weight matrices from binary pattern sets, their amplitude-encoded
// batch form, the rho - I/d = W identity, and the diagonal phase correction
// that converts e^{-i t rho} into e^{-i t W} on the learning qubit.

#pragma once

#include <vector>

#include "qhl/bcqse.hpp"
#include "qhl/circuit.hpp"
#include "qhl/linalg.hpp"

namespace qhl {

struct PatternSet {
  int dim = 0;                             // d, a power of two
  std::vector<std::vector<int>> patterns;  // M rows of +/-1 entries

  long long copies() const { return static_cast<long long>(patterns.size()); }
};

/// Validates: nonempty, rows of equal power-of-two length, entries +/-1.
PatternSet make_pattern_set(std::vector<std::vector<int>> patterns);

struct HebbianWeights {
  int dim = 0;
  Eigen::MatrixXd w;  // symmetric, zero diagonal, entries in [-1/d, 1/d]
};

/// W_ij = (1/(M d)) sum_m x^m_i x^m_j for i != j, W_ii = 0.
HebbianWeights build_weight_matrix(const PatternSet& set);

/// |x> with amplitudes x_i / sqrt(d); entries must be +/-1.
StateVector amplitude_encode(const std::vector<int>& pattern);

/// The pattern set as an amplitude-encoded training batch.
TrainingBatch encode_pattern_batch(const PatternSet& set, double t_data = 1.0);

/// Operator norm of (rho - I/d) - W; exactly zero for +/-1 patterns.
double quantum_hebbian_identity_check(const PatternSet& set);

/// One-qubit circuit enacting diag(1, e^{i delta_t / d}) up to global phase:
/// the correction that removes the I/d offset from the exponentiated state.
Circuit identity_phase_correction(double delta_t, int dim, double eta = 1e-3);

/// Lenient path for real-valued data: rows are normalized before encoding
/// and the identity residual is reported instead of asserted.
struct LenientEncoding {
  TrainingBatch batch;
  HebbianWeights weights;    // from the rescaled rows
  double identity_residual;  // op_norm((rho - I/d) - W)
};
LenientEncoding encode_real_patterns(
    const std::vector<std::vector<double>>& rows, double t_data = 1.0);

}  // namespace qhl
