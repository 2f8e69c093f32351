// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include "qhl/channel.hpp"

#include <cmath>
#include <mutex>

#include <Eigen/Eigenvalues>

#include "qhl/errors.hpp"

namespace qhl {

namespace {

std::mutex g_audit_mutex;
CptpAuditRecord g_audit;

int qubits_for_dim(Eigen::Index d, const char* what) {
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  if ((Eigen::Index{1} << n) != d) {
    throw contract_error(std::string(what) + ": dimension " +
                         std::to_string(d) + " is not a power of two");
  }
  return n;
}

}  // namespace

QuantumChannel channel_from_unitary(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) {
    throw contract_error("channel_from_unitary: matrix is not square");
  }
  if (!is_unitary(u, 1e-10)) {
    throw contract_error("channel_from_unitary: matrix is not unitary"
                         " (residual " +
                         std::to_string(unitarity_residual(u)) + ")");
  }
  int n = qubits_for_dim(u.rows(), "channel_from_unitary");
  return channel_from_kraus({u}, n, n);
}

QuantumChannel channel_from_kraus(const std::vector<ComplexMatrix>& kraus,
                                  int in_qubits, int out_qubits) {
  if (kraus.empty()) {
    throw contract_error("channel_from_kraus: no Kraus operators");
  }
  Eigen::Index din = Eigen::Index{1} << in_qubits;
  Eigen::Index dout = Eigen::Index{1} << out_qubits;
  for (const auto& k : kraus) {
    if (k.rows() != dout || k.cols() != din) {
      throw contract_error("channel_from_kraus: operator shape mismatch");
    }
  }
  // J[(i,k),(j,l)] = sum_a A_a(k,i) conj(A_a(l,j))
  ComplexMatrix choi = ComplexMatrix::Zero(din * dout, din * dout);
  for (const auto& a : kraus) {
    for (Eigen::Index i = 0; i < din; ++i) {
      for (Eigen::Index j = 0; j < din; ++j) {
        choi.block(i * dout, j * dout, dout, dout) +=
            a.col(i) * a.col(j).adjoint();
      }
    }
  }
  QuantumChannel c{in_qubits, out_qubits, std::move(choi)};
  validate_cptp(c);
  return c;
}

QuantumChannel identity_channel(int num_qubits) {
  Eigen::Index d = Eigen::Index{1} << num_qubits;
  return channel_from_unitary(ComplexMatrix::Identity(d, d));
}

ComplexMatrix choi_to_superop(const QuantumChannel& c) {
  // Row-major vec: vec(rho)[i*d+j] = rho(i,j). Then
  // S[(k,l),(i,j)] = J[(i,k),(j,l)].
  Eigen::Index din = c.in_dim();
  Eigen::Index dout = c.out_dim();
  ComplexMatrix s(dout * dout, din * din);
  for (Eigen::Index k = 0; k < dout; ++k) {
    for (Eigen::Index l = 0; l < dout; ++l) {
      for (Eigen::Index i = 0; i < din; ++i) {
        for (Eigen::Index j = 0; j < din; ++j) {
          s(k * dout + l, i * din + j) = c.choi(i * dout + k, j * dout + l);
        }
      }
    }
  }
  return s;
}

QuantumChannel superop_to_choi(const ComplexMatrix& s, int in_qubits,
                               int out_qubits) {
  Eigen::Index din = Eigen::Index{1} << in_qubits;
  Eigen::Index dout = Eigen::Index{1} << out_qubits;
  if (s.rows() != dout * dout || s.cols() != din * din) {
    throw contract_error("superop_to_choi: shape mismatch");
  }
  ComplexMatrix choi(din * dout, din * dout);
  for (Eigen::Index k = 0; k < dout; ++k) {
    for (Eigen::Index l = 0; l < dout; ++l) {
      for (Eigen::Index i = 0; i < din; ++i) {
        for (Eigen::Index j = 0; j < din; ++j) {
          choi(i * dout + k, j * dout + l) = s(k * dout + l, i * din + j);
        }
      }
    }
  }
  QuantumChannel c{in_qubits, out_qubits, std::move(choi)};
  validate_cptp(c);
  return c;
}

QuantumChannel channel_compose(const QuantumChannel& b,
                               const QuantumChannel& a) {
  if (a.out_qubits != b.in_qubits) {
    throw contract_error("channel_compose: intermediate dimension mismatch");
  }
  ComplexMatrix s = choi_to_superop(b) * choi_to_superop(a);
  return superop_to_choi(s, a.in_qubits, b.out_qubits);
}

namespace {

// Snap a square-channel superoperator back onto the trace-preserving
// subspace: with row-major vec, TP reads t' S = t' where t is the indicator
// of diagonal slots. Repeated squaring doubles any tiny deviation per step;
// this rank-1 correction keeps it at rounding level.
void project_trace_preserving(ComplexMatrix& s, Eigen::Index d) {
  ComplexVector t = ComplexVector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    t(i * d + i) = Complex(1.0, 0.0);
  }
  const ComplexVector e = s.adjoint() * t - t;
  s.noalias() -= t * e.adjoint() / static_cast<double>(d);
}

}  // namespace

QuantumChannel channel_power(const QuantumChannel& c, long long k) {
  if (c.in_qubits != c.out_qubits) {
    throw contract_error("channel_power: channel is not an endomap");
  }
  if (k < 1) throw contract_error("channel_power: exponent must be >= 1");
  const Eigen::Index d = c.in_dim();
  ComplexMatrix base = choi_to_superop(c);
  ComplexMatrix acc;
  bool have = false;
  long long e = k;
  while (e > 0) {
    if (e & 1) {
      acc = have ? ComplexMatrix(acc * base) : base;
      project_trace_preserving(acc, d);
      have = true;
    }
    e >>= 1;
    if (e > 0) {
      base = base * base;
      project_trace_preserving(base, d);
    }
  }
  return superop_to_choi(acc, c.in_qubits, c.out_qubits);
}

DensityMatrix channel_apply(const QuantumChannel& c, const DensityMatrix& rho) {
  if (rho.num_qubits != c.in_qubits) {
    throw contract_error("channel_apply: input dimension mismatch");
  }
  Eigen::Index din = c.in_dim();
  Eigen::Index dout = c.out_dim();
  ComplexMatrix out = ComplexMatrix::Zero(dout, dout);
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index j = 0; j < din; ++j) {
      out += rho.matrix(i, j) * c.choi.block(i * dout, j * dout, dout, dout);
    }
  }
  // Rounding in long compositions can leave tiny asymmetries; re-Hermitize.
  out = 0.5 * (out + out.adjoint()).eval();
  return make_density(c.out_qubits, std::move(out), /*check_psd=*/false);
}

double channel_distance(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.in_qubits != b.in_qubits || a.out_qubits != b.out_qubits) {
    throw contract_error("channel_distance: dimension mismatch");
  }
  return 0.5 * trace_norm(a.choi - b.choi) / static_cast<double>(a.in_dim());
}

void validate_cptp(const QuantumChannel& c, double psd_tol, double tp_tol) {
  Eigen::Index din = c.in_dim();
  Eigen::Index dout = c.out_dim();
  if (c.choi.rows() != din * dout || c.choi.cols() != din * dout) {
    throw contract_error("validate_cptp: Choi dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
      ComplexMatrix(0.5 * (c.choi + c.choi.adjoint())),
      Eigen::EigenvaluesOnly);
  double min_eig = es.eigenvalues().minCoeff();

  // Tr_out J: contract the output factor of each d_out-block.
  ComplexMatrix tr_out = ComplexMatrix::Zero(din, din);
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index j = 0; j < din; ++j) {
      tr_out(i, j) = c.choi.block(i * dout, j * dout, dout, dout).trace();
    }
  }
  double tp_dev =
      (tr_out - ComplexMatrix::Identity(din, din)).cwiseAbs().maxCoeff();
  double herm_dev = (c.choi - c.choi.adjoint()).cwiseAbs().maxCoeff();

  {
    std::lock_guard<std::mutex> lock(g_audit_mutex);
    ++g_audit.channels_checked;
    g_audit.worst_min_eigenvalue =
        std::min(g_audit.worst_min_eigenvalue, min_eig);
    g_audit.worst_tp_deviation =
        std::max({g_audit.worst_tp_deviation, tp_dev, herm_dev});
  }

  if (min_eig < -psd_tol) {
    throw contract_error("validate_cptp: Choi matrix not PSD (min eigenvalue " +
                         std::to_string(min_eig) + ")");
  }
  if (tp_dev > tp_tol) {
    throw contract_error("validate_cptp: not trace preserving (deviation " +
                         std::to_string(tp_dev) + ")");
  }
  if (herm_dev > tp_tol) {
    throw contract_error("validate_cptp: Choi matrix not Hermitian");
  }
}

CptpAuditRecord cptp_audit() {
  std::lock_guard<std::mutex> lock(g_audit_mutex);
  return g_audit;
}

void reset_cptp_audit() {
  std::lock_guard<std::mutex> lock(g_audit_mutex);
  g_audit = CptpAuditRecord{};
}

}  // namespace qhl
