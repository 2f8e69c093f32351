// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include "qhl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qhl/errors.hpp"

namespace qhl {

namespace {

Eigen::Index pow2(int n) { return Eigen::Index{1} << n; }

void check_qubit_dim(int num_qubits, Eigen::Index dim, const char* what) {
  if (num_qubits < 0 || dim != pow2(num_qubits)) {
    throw contract_error(std::string(what) + ": dimension " +
                         std::to_string(dim) + " does not match " +
                         std::to_string(num_qubits) + " qubits");
  }
}

}  // namespace

StateVector make_state(int num_qubits, ComplexVector amplitudes) {
  check_qubit_dim(num_qubits, amplitudes.size(), "make_state");
  double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw contract_error("make_state: vector norm " + std::to_string(norm) +
                         " is not 1");
  }
  return StateVector{num_qubits, std::move(amplitudes)};
}

StateVector basis_state(int num_qubits, Eigen::Index index) {
  Eigen::Index d = pow2(num_qubits);
  if (index < 0 || index >= d) {
    throw contract_error("basis_state: index out of range");
  }
  ComplexVector v = ComplexVector::Zero(d);
  v(index) = 1.0;
  return StateVector{num_qubits, std::move(v)};
}

DensityMatrix make_density(int num_qubits, ComplexMatrix m, bool check_psd) {
  check_qubit_dim(num_qubits, m.rows(), "make_density");
  if (m.rows() != m.cols()) {
    throw contract_error("make_density: matrix is not square");
  }
  if (!is_hermitian(m, 1e-10)) {
    throw contract_error("make_density: matrix is not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > 1e-9 ||
      std::abs(m.trace().imag()) > 1e-9) {
    throw contract_error("make_density: trace is not 1");
  }
  if (check_psd) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m,
                                                    Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol) {
      throw contract_error("make_density: matrix is not positive"
                           " semidefinite (min eigenvalue " +
                           std::to_string(es.eigenvalues().minCoeff()) + ")");
    }
  }
  return DensityMatrix{num_qubits, std::move(m)};
}

DensityMatrix density_from_state(const StateVector& psi) {
  ComplexMatrix m = psi.amplitudes * psi.amplitudes.adjoint();
  return DensityMatrix{psi.num_qubits, std::move(m)};
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return unitarity_residual(m) <= tol;
}

double unitarity_residual(const ComplexMatrix& m) {
  ComplexMatrix r = m.adjoint() * m;
  r -= ComplexMatrix::Identity(m.cols(), m.cols());
  return op_norm(r);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron_vec(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix swap_operator(int n) {
  if (n < 1) throw contract_error("swap_operator: register size must be >= 1");
  Eigen::Index d = pow2(n);
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index x = 0; x < d; ++x) {
    for (Eigen::Index y = 0; y < d; ++y) {
      // |y>|x> <x|<y|
      s(y * d + x, x * d + y) = 1.0;
    }
  }
  return s;
}

ComplexMatrix matrix_exp_hermitian(const ComplexMatrix& h, double t) {
  if (!is_hermitian(h, 1e-10)) {
    throw contract_error("matrix_exp_hermitian: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw contract_error("matrix_exp_hermitian: eigendecomposition failed");
  }
  ComplexVector phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -t * es.eigenvalues()(k)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix controlled_exp_hermitian(const ComplexMatrix& h, double t) {
  const Eigen::Index d = h.rows();
  ComplexMatrix u = ComplexMatrix::Zero(2 * d, 2 * d);
  u.topLeftCorner(d, d) = ComplexMatrix::Identity(d, d);
  u.bottomRightCorner(d, d) = matrix_exp_hermitian(h, t);
  return u;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<int>& keep, int total_qubits) {
  check_qubit_dim(total_qubits, m.rows(), "partial_trace");
  if (m.rows() != m.cols()) {
    throw contract_error("partial_trace: matrix is not square");
  }
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw contract_error("partial_trace: duplicate qubit in keep list");
  }
  for (int q : sorted) {
    if (q < 0 || q >= total_qubits) {
      throw contract_error("partial_trace: qubit index out of range");
    }
  }
  std::vector<int> traced;
  for (int q = 0; q < total_qubits; ++q) {
    if (!std::binary_search(sorted.begin(), sorted.end(), q)) {
      traced.push_back(q);
    }
  }
  int nk = static_cast<int>(sorted.size());
  int nt = total_qubits - nk;
  Eigen::Index dk = pow2(nk);
  Eigen::Index dt = pow2(nt);

  // Map (kept index, traced index) to a full basis index. Qubit 0 is the
  // most significant bit, so qubit q contributes bit (total_qubits-1-q).
  auto full_index = [&](Eigen::Index ik, Eigen::Index it) {
    Eigen::Index b = 0;
    for (int p = 0; p < nk; ++p) {
      Eigen::Index bit = (ik >> (nk - 1 - p)) & 1;
      b |= bit << (total_qubits - 1 - sorted[static_cast<size_t>(p)]);
    }
    for (int p = 0; p < nt; ++p) {
      Eigen::Index bit = (it >> (nt - 1 - p)) & 1;
      b |= bit << (total_qubits - 1 - traced[static_cast<size_t>(p)]);
    }
    return b;
  };

  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t) {
        acc += m(full_index(i, t), full_index(j, t));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

double op_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  // Largest singular value = sqrt of largest eigenvalue of m† m, which is
  // Hermitian PSD; the self-adjoint solver is much faster than a full SVD.
  ComplexMatrix g = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g, Eigen::EigenvaluesOnly);
  double lmax = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, lmax));
}

double trace_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == m.cols() && is_hermitian(m, 1e-10)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double phase_invariant_distance(const ComplexMatrix& a,
                                const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw contract_error("phase_invariant_distance: shape mismatch");
  }
  if (a.rows() == 2 && a.cols() == 2 && is_unitary(a, 1e-9) &&
      is_unitary(b, 1e-9)) {
    // For U,V in U(2): min_phi ‖U − e^{i phi}V‖_op = sqrt(2 − |Tr(V†U)|)
    // when |Tr| <= 2 (clamped for roundoff).
    double t = std::abs((b.adjoint() * a).trace());
    return std::sqrt(std::max(0.0, 2.0 - std::min(2.0, t)));
  }
  auto dist_at = [&](double phi) {
    return op_norm(a - std::exp(Complex(0.0, phi)) * b);
  };
  // Seed near the phase aligning the traces, then refine around the best of
  // a coarse scan; the objective is unimodal near its minimum.
  Complex tr = (b.adjoint() * a).trace();
  double best_phi = (std::abs(tr) > 1e-14) ? std::arg(tr) : 0.0;
  double best = dist_at(best_phi);
  constexpr int kScan = 64;
  for (int k = 0; k < kScan; ++k) {
    double phi = 2.0 * std::numbers::pi * k / kScan;
    double d = dist_at(phi);
    if (d < best) {
      best = d;
      best_phi = phi;
    }
  }
  double lo = best_phi - 2.0 * std::numbers::pi / kScan;
  double hi = best_phi + 2.0 * std::numbers::pi / kScan;
  constexpr double kGolden = 0.6180339887498949;
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = dist_at(x1);
  double f2 = dist_at(x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = dist_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = dist_at(x2);
    }
  }
  return std::min({best, f1, f2});
}

}  // namespace qhl
