// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include <numbers>
#include <random>

#include "doctest.h"
#include "qhl/circuit.hpp"
#include "qhl/errors.hpp"
#include "qhl/linalg.hpp"
#include "test_helpers.hpp"

using namespace qhl;

TEST_CASE("kron basics") {
  ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK((kron(i2, i2) - ComplexMatrix::Identity(4, 4)).norm() == 0.0);

  ComplexMatrix z = pauli_z();
  ComplexMatrix zi = kron(z, i2);
  ComplexVector diag(4);
  diag << 1, 1, -1, -1;
  CHECK((zi - ComplexMatrix(diag.asDiagonal())).norm() == 0.0);

  ComplexMatrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  ComplexVector v00 = ComplexVector::Zero(4);
  v00(0) = 1.0;
  ComplexVector out = kron(h, h) * v00;
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(out(i) - Complex(0.5, 0.0)) < 1e-15);
  }
}

TEST_CASE("swap_operator action and involution") {
  ComplexMatrix s1 = swap_operator(1);
  // |01> (index 1) -> |10> (index 2)
  CHECK(s1(2, 1) == Complex(1.0, 0.0));
  CHECK(s1(1, 1) == Complex(0.0, 0.0));
  CHECK((s1 * s1 - ComplexMatrix::Identity(4, 4)).norm() == 0.0);
  CHECK((s1 - s1.adjoint()).norm() == 0.0);

  // n=2: S |x>|y> = |y>|x> for x=|01>, y=|10>
  ComplexMatrix s2 = swap_operator(2);
  ComplexVector in = ComplexVector::Zero(16);
  in(1 * 4 + 2) = 1.0;
  ComplexVector out = s2 * in;
  CHECK(std::abs(out(2 * 4 + 1) - Complex(1.0, 0.0)) == 0.0);

  CHECK_THROWS_AS(swap_operator(0), contract_error);
}

TEST_CASE("matrix_exp_hermitian closed forms") {
  ComplexMatrix zero = ComplexMatrix::Zero(4, 4);
  CHECK((matrix_exp_hermitian(zero, 1.7) - ComplexMatrix::Identity(4, 4))
            .norm() < 1e-14);

  // e^{-i theta S} = cos(theta) I - i sin(theta) S, from S^2 = I
  const double theta = 0.3;
  ComplexMatrix s = swap_operator(1);
  ComplexMatrix got = matrix_exp_hermitian(s, theta);
  ComplexMatrix want = std::cos(theta) * ComplexMatrix::Identity(4, 4) -
                       Complex(0.0, 1.0) * std::sin(theta) * s;
  CHECK((got - want).cwiseAbs().maxCoeff() < 1e-14);

  // e^{-i t |x><x|} |x> = e^{-i t} |x>
  ComplexMatrix proj = ComplexMatrix::Zero(2, 2);
  proj(0, 0) = 1.0;
  ComplexVector x = ComplexVector::Zero(2);
  x(0) = 1.0;
  ComplexVector evolved = matrix_exp_hermitian(proj, 1.0) * x;
  CHECK(std::abs(evolved(0) - std::exp(Complex(0.0, -1.0))) < 1e-14);

  ComplexMatrix nonherm(2, 2);
  nonherm << 0, 1, 0, 0;
  CHECK_THROWS_AS(matrix_exp_hermitian(nonherm, 1.0), contract_error);
}

TEST_CASE("matrix_exp additivity and unitarity") {
  std::mt19937_64 rng(7);
  DensityMatrix rho = testing::random_density(2, rng);
  ComplexMatrix a = matrix_exp_hermitian(rho.matrix, 0.4);
  ComplexMatrix b = matrix_exp_hermitian(rho.matrix, 1.1);
  ComplexMatrix ab = matrix_exp_hermitian(rho.matrix, 1.5);
  CHECK((a * b - ab).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(unitarity_residual(a) < 1e-12);
}

TEST_CASE("controlled_exp_hermitian block structure") {
  std::mt19937_64 rng(9);
  DensityMatrix rho = testing::random_density(1, rng);
  ComplexMatrix u = controlled_exp_hermitian(rho.matrix, 0.8);
  CHECK((u.topLeftCorner(2, 2) - ComplexMatrix::Identity(2, 2)).norm() ==
        0.0);
  CHECK(u.topRightCorner(2, 2).norm() == 0.0);
  CHECK((u.bottomRightCorner(2, 2) - matrix_exp_hermitian(rho.matrix, 0.8))
            .norm() == 0.0);
}

TEST_CASE("partial_trace") {
  std::mt19937_64 rng(11);
  StateVector x = testing::random_state(1, rng);

  // trace out second qubit of |x><x| (x) |0><0| -> |x><x|
  ComplexVector full = kron_vec(x.amplitudes, basis_state(1, 0).amplitudes);
  ComplexMatrix rho = full * full.adjoint();
  ComplexMatrix red = partial_trace(rho, {0}, 2);
  CHECK((red - x.amplitudes * x.amplitudes.adjoint()).cwiseAbs().maxCoeff() <
        1e-14);

  // either side of the Bell state -> I/2
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  ComplexMatrix bb = bell * bell.adjoint();
  for (int q : {0, 1}) {
    ComplexMatrix half = partial_trace(bb, {q}, 2);
    CHECK((half - 0.5 * ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
          1e-14);
  }

  // trace preservation on a random 3-qubit density matrix
  DensityMatrix big = testing::random_density(3, rng);
  ComplexMatrix kept = partial_trace(big.matrix, {0, 2}, 3);
  CHECK(std::abs(kept.trace().real() - 1.0) < 1e-12);

  CHECK_THROWS_AS(partial_trace(bb, {2}, 2), contract_error);
}

TEST_CASE("partial_trace inverts kron embedding on product states") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    StateVector a = testing::random_state(2, rng);
    StateVector b = testing::random_state(1, rng);
    ComplexVector v = kron_vec(a.amplitudes, b.amplitudes);
    ComplexMatrix rho = v * v.adjoint();
    ComplexMatrix ra = partial_trace(rho, {0, 1}, 3);
    CHECK((ra - a.amplitudes * a.amplitudes.adjoint()).cwiseAbs().maxCoeff() <
          1e-13);
  }
}

TEST_CASE("op_norm") {
  CHECK(op_norm(ComplexMatrix::Identity(3, 3)) == doctest::Approx(1.0));
  std::mt19937_64 rng(17);
  ComplexMatrix u = testing::random_unitary(4, rng);
  CHECK(op_norm(u - u) == 0.0);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = Complex(3.0, 0.0);
  d(1, 1) = Complex(0.0, -4.0);
  CHECK(op_norm(d) == doctest::Approx(4.0));
}

TEST_CASE("phase_invariant_distance") {
  ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(phase_invariant_distance(i2, std::exp(Complex(0, 1.234)) * i2) <
        1e-12);
  // I vs Z: min over phases of ||I - e^{ip}Z|| = sqrt(2)
  CHECK(phase_invariant_distance(i2, pauli_z()) ==
        doctest::Approx(std::sqrt(2.0)));
  // larger matrices: golden-section path agrees with the 2x2 closed form
  std::mt19937_64 rng(19);
  ComplexMatrix u = testing::random_unitary(4, rng);
  CHECK(phase_invariant_distance(u, std::exp(Complex(0, -0.7)) * u) < 1e-7);
}

TEST_CASE("make_state and make_density validation") {
  ComplexVector bad(2);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(make_state(1, bad), contract_error);
  ComplexMatrix notpsd(2, 2);
  notpsd << 2, 0, 0, -1;
  CHECK_THROWS_AS(make_density(1, notpsd), contract_error);
}
