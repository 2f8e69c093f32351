// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qhl/hebbian.hpp"
#include "test_helpers.hpp"

using namespace qhl;

TEST_CASE("pattern sets validate shape and entries") {
  CHECK_THROWS_AS(make_pattern_set({}), input_error);
  CHECK_THROWS_AS(make_pattern_set({{1, -1, 1}}), input_error);  // length 3
  CHECK_THROWS_AS(make_pattern_set({{1, 0}}), input_error);      // entry 0
  CHECK_THROWS_AS(make_pattern_set({{1, 1}, {1, -1, 1, -1}}), input_error);
  PatternSet set = make_pattern_set({{1, -1}, {-1, -1}});
  CHECK(set.dim == 2);
  CHECK(set.copies() == 2);
}

TEST_CASE("weight matrix closed forms") {
  PatternSet one = make_pattern_set({{1, 1}});
  HebbianWeights w1 = build_weight_matrix(one);
  Eigen::MatrixXd expect(2, 2);
  expect << 0.0, 0.5, 0.5, 0.0;
  CHECK((w1.w - expect).norm() < 1e-15);

  PatternSet two = make_pattern_set({{1, 1}, {1, -1}});
  CHECK(build_weight_matrix(two).w.norm() < 1e-15);
}

TEST_CASE("single pattern weights are the projector minus the diagonal") {
  std::mt19937_64 rng(103);
  std::vector<int> x = testing::random_pattern(8, rng);
  HebbianWeights w = build_weight_matrix(make_pattern_set({x}));
  Eigen::VectorXd xv(8);
  for (int i = 0; i < 8; ++i) xv(i) = x[i];
  Eigen::MatrixXd expect = xv * xv.transpose() / 8.0 -
                           Eigen::MatrixXd::Identity(8, 8) / 8.0;
  CHECK((w.w - expect).norm() < 1e-14);
}

TEST_CASE("weight matrices are symmetric, hollow, and entry bounded") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    int d = 1 << (1 + static_cast<int>(rng() % 3));
    std::vector<std::vector<int>> rows;
    for (int m = 0; m < 3; ++m) rows.push_back(testing::random_pattern(d, rng));
    HebbianWeights w = build_weight_matrix(make_pattern_set(rows));
    CHECK((w.w - w.w.transpose()).norm() < 1e-15);
    CHECK(w.w.diagonal().norm() == 0.0);
    CHECK(w.w.cwiseAbs().maxCoeff() <= 1.0 / d + 1e-15);
    CHECK(op_norm(w.w.cast<Complex>()) <= 1.0 + 1e-12);
  }
}

TEST_CASE("amplitude encoding produces the uniform-magnitude state") {
  StateVector plus = amplitude_encode({1, 1});
  CHECK(std::abs(plus.amplitudes(0) - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
  CHECK(std::abs(plus.amplitudes(1) - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);

  StateVector minus = amplitude_encode({1, -1});
  CHECK(std::abs(minus.amplitudes(1) + Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);

  DensityMatrix rho = ensemble_state(
      encode_pattern_batch(make_pattern_set({{1, 1, 1, 1}})));
  CHECK((rho.matrix - ComplexMatrix::Constant(4, 4, 0.25)).norm() < 1e-14);

  CHECK_THROWS_AS(amplitude_encode({1, 2}), input_error);
  CHECK_THROWS_AS(amplitude_encode({1, 1, 1}), input_error);
}

TEST_CASE("encoding preserves the classical inner product") {
  std::mt19937_64 rng(109);
  for (int d : {2, 4, 8, 16}) {
    std::vector<int> x = testing::random_pattern(d, rng);
    std::vector<int> y = testing::random_pattern(d, rng);
    Complex qdot = amplitude_encode(x).amplitudes.adjoint() *
                   amplitude_encode(y).amplitudes;
    double cdot = 0.0;
    for (int i = 0; i < d; ++i) cdot += x[i] * y[i];
    CHECK(std::abs(qdot - Complex(cdot / d, 0.0)) < 1e-14);
  }
}

TEST_CASE("rho minus I/d equals W exactly for binary patterns") {
  CHECK(quantum_hebbian_identity_check(make_pattern_set({{1, 1}})) < 1e-15);
  CHECK(quantum_hebbian_identity_check(make_pattern_set({{1, 1}, {1, -1}})) <
        1e-15);
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 1 << (1 + static_cast<int>(rng() % 3));
    std::vector<std::vector<int>> rows;
    int m = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < m; ++j) rows.push_back(testing::random_pattern(d, rng));
    CHECK(quantum_hebbian_identity_check(make_pattern_set(rows)) <= 1e-12);
  }
}

TEST_CASE("phase correction enacts the diagonal phase") {
  Circuit zero = identity_phase_correction(0.0, 4);
  CHECK(phase_invariant_distance(compile_unitary(zero),
                                 ComplexMatrix::Identity(2, 2)) < 1e-12);

  const double delta_t = 0.2;
  const int d = 4;
  Circuit c = identity_phase_correction(delta_t, d);
  CHECK(c.num_qubits == 1);
  ComplexMatrix target(2, 2);
  target << 1.0, 0.0, 0.0, std::exp(Complex(0.0, delta_t / d));
  CHECK(phase_invariant_distance(compile_unitary(c), target) <= 1e-3 + 1e-12);
}

TEST_CASE("skipping the correction costs exactly 1/d per unit time") {
  // The omitted generator term is delta_t * I/d; its operator norm per unit
  // delta_t is 1/d.
  for (int d : {2, 4, 8}) {
    ComplexMatrix omitted = ComplexMatrix::Identity(d, d) / double(d);
    CHECK(op_norm(omitted) == doctest::Approx(1.0 / d));
  }
}

TEST_CASE("corrected rho-target equals the W-target") {
  // e^{-i t rho} = e^{-i t/d} e^{-i t W} for rho = I/d + W, so conjugating
  // the controlled evolution by the phase correction must reproduce the
  // W-generated target exactly (commuting generators).
  PatternSet set = make_pattern_set({{1, 1}, {1, -1}, {-1, 1}});
  TrainingBatch batch = encode_pattern_batch(set);
  const double t = 0.7;
  const int d = set.dim;

  QuantumChannel rho_target = target_channel(batch, t);

  HebbianWeights weights = build_weight_matrix(set);
  ComplexMatrix w_gen = controlled_exp_hermitian(weights.w.cast<Complex>(), t);
  QuantumChannel w_target = channel_from_unitary(w_gen);

  // Exact correction: diag(1, e^{+i t/d}) on the learning qubit.
  ComplexMatrix corr = ComplexMatrix::Identity(4, 4);
  corr(2, 2) = corr(3, 3) = std::exp(Complex(0.0, t / d));
  QuantumChannel corrected =
      channel_compose(channel_from_unitary(corr), rho_target);
  CHECK(channel_distance(corrected, w_target) < 1e-10);
}

TEST_CASE("lenient encoding reports instead of asserting") {
  LenientEncoding enc = encode_real_patterns({{0.3, -1.2}, {2.0, 1.0}});
  CHECK(enc.batch.copies() == 2);
  for (const StateVector& s : enc.batch.states)
    CHECK(std::abs(s.amplitudes.norm() - 1.0) < 1e-12);
  CHECK(enc.identity_residual >= 0.0);
  // Non-binary data genuinely violates the identity.
  CHECK(enc.identity_residual > 1e-6);

  LenientEncoding binary = encode_real_patterns({{1.0, 1.0}});
  CHECK(binary.identity_residual < 1e-12);

  CHECK_THROWS_AS(encode_real_patterns({{0.0, 0.0}}), input_error);
  CHECK_THROWS_AS(encode_real_patterns({{1.0, 1.0, 1.0}}), input_error);
}
