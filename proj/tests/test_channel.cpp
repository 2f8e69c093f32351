// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qhl/channel.hpp"
#include "qhl/circuit.hpp"
#include "test_helpers.hpp"

using namespace qhl;

TEST_CASE("choi matrix of a unitary is the expected rank-one form") {
  // For U the Choi matrix is sum_{ij} |i><j| (x) U|i><j|U^dag.
  std::mt19937_64 rng(11);
  ComplexMatrix u = testing::random_unitary(4, rng);
  QuantumChannel c = channel_from_unitary(u);
  CHECK(c.in_qubits == 2);
  CHECK(c.out_qubits == 2);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) {
      ComplexMatrix block = c.choi.block(i * 4, j * 4, 4, 4);
      ComplexMatrix expect = u.col(i) * u.col(j).adjoint();
      CHECK((block - expect).norm() < 1e-12);
    }
}

TEST_CASE("identity channel leaves densities unchanged") {
  std::mt19937_64 rng(13);
  QuantumChannel id = identity_channel(2);
  DensityMatrix rho = testing::random_density(2, rng);
  DensityMatrix out = channel_apply(id, rho);
  CHECK((out.matrix - rho.matrix).norm() < 1e-12);
}

TEST_CASE("channel application matches direct conjugation") {
  std::mt19937_64 rng(17);
  ComplexMatrix u = testing::random_unitary(8, rng);
  QuantumChannel c = channel_from_unitary(u);
  DensityMatrix rho = testing::random_density(3, rng);
  DensityMatrix out = channel_apply(c, rho);
  ComplexMatrix expect = u * rho.matrix * u.adjoint();
  CHECK((out.matrix - expect).norm() < 1e-11);
  CHECK(std::abs(out.matrix.trace().real() - 1.0) < 1e-12);
}

TEST_CASE("composition with the adjoint returns the identity channel") {
  std::mt19937_64 rng(19);
  ComplexMatrix u = testing::random_unitary(4, rng);
  QuantumChannel forward = channel_from_unitary(u);
  QuantumChannel backward = channel_from_unitary(u.adjoint().eval());
  QuantumChannel round = channel_compose(backward, forward);
  CHECK(channel_distance(round, identity_channel(2)) < 1e-10);
}

TEST_CASE("composition order is b after a") {
  ComplexMatrix x = pauli_x();
  ComplexMatrix h = gate_matrix(GateKind::H);
  QuantumChannel hx = channel_compose(channel_from_unitary(h), channel_from_unitary(x));
  QuantumChannel direct = channel_from_unitary((h * x).eval());
  CHECK(channel_distance(hx, direct) < 1e-12);
}

TEST_CASE("channel distance is zero on itself and one between I and X") {
  std::mt19937_64 rng(23);
  QuantumChannel phi = channel_from_unitary(testing::random_unitary(4, rng));
  CHECK(channel_distance(phi, phi) == doctest::Approx(0.0));

  QuantumChannel id = identity_channel(1);
  QuantumChannel flip = channel_from_unitary(pauli_x());
  CHECK(channel_distance(id, flip) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(channel_distance(id, identity_channel(2)), contract_error);
}

TEST_CASE("kraus construction reproduces the map and is CPTP") {
  // Dephasing channel: K0 = sqrt(p) I, K1 = sqrt(1-p) Z.
  double p = 0.7;
  std::vector<ComplexMatrix> kraus = {
      std::sqrt(p) * ComplexMatrix::Identity(2, 2),
      std::sqrt(1.0 - p) * pauli_z()};
  QuantumChannel deph = channel_from_kraus(kraus, 1, 1);
  validate_cptp(deph);

  ComplexMatrix rho_m(2, 2);
  rho_m << 0.5, 0.5, 0.5, 0.5;  // |+><+|
  DensityMatrix out = channel_apply(deph, make_density(1, rho_m));
  CHECK(std::abs(out.matrix(0, 1).real() - (2.0 * p - 1.0) * 0.5) < 1e-12);
  CHECK(std::abs(out.matrix(0, 0).real() - 0.5) < 1e-12);
}

TEST_CASE("kraus maps can shrink the output space") {
  // Trace over the second qubit of a two-qubit input: K_j = I (x) <j|.
  std::vector<ComplexMatrix> kraus;
  for (int j = 0; j < 2; ++j) {
    ComplexMatrix k = ComplexMatrix::Zero(2, 4);
    k(0, j) = 1.0;
    k(1, 2 + j) = 1.0;
    kraus.push_back(k);
  }
  QuantumChannel tr_b = channel_from_kraus(kraus, 2, 1);
  validate_cptp(tr_b);
  std::mt19937_64 rng(29);
  DensityMatrix rho = testing::random_density(2, rng);
  DensityMatrix out = channel_apply(tr_b, rho);
  ComplexMatrix expect = partial_trace(rho.matrix, {0}, 2);
  CHECK((out.matrix - expect).norm() < 1e-12);
}

TEST_CASE("channel_power matches repeated composition") {
  std::mt19937_64 rng(31);
  ComplexMatrix u = testing::random_unitary(4, rng);
  QuantumChannel c = channel_from_unitary(u);
  QuantumChannel five = channel_power(c, 5);
  QuantumChannel manual = c;
  for (int i = 1; i < 5; ++i) manual = channel_compose(c, manual);
  CHECK(channel_distance(five, manual) < 1e-10);
  CHECK(channel_distance(channel_power(c, 1), c) < 1e-12);
  CHECK_THROWS_AS(channel_power(c, 0), contract_error);
}

TEST_CASE("superoperator round-trip preserves the channel") {
  std::mt19937_64 rng(37);
  QuantumChannel c = channel_from_unitary(testing::random_unitary(8, rng));
  ComplexMatrix s = choi_to_superop(c);
  QuantumChannel back = superop_to_choi(s, c.in_qubits, c.out_qubits);
  CHECK((back.choi - c.choi).norm() < 1e-11);
}

TEST_CASE("validate_cptp rejects non-physical maps and feeds the audit") {
  QuantumChannel bogus = identity_channel(1);
  bogus.choi(0, 0) = -0.5;
  CHECK_THROWS_AS(validate_cptp(bogus), contract_error);
  QuantumChannel leaky = identity_channel(1);
  leaky.choi *= 0.5;  // positive but trace decreasing
  CHECK_THROWS_AS(validate_cptp(leaky), contract_error);

  // Failures are recorded before the throw; reset, then confirm that clean
  // channels leave a clean record.
  reset_cptp_audit();
  validate_cptp(identity_channel(1));
  validate_cptp(channel_from_unitary(gate_matrix(GateKind::H)));
  CptpAuditRecord rec = cptp_audit();
  CHECK(rec.channels_checked >= 2);
  CHECK(rec.worst_min_eigenvalue >= -1e-10);
  CHECK(rec.worst_tp_deviation <= 1e-10);
}
