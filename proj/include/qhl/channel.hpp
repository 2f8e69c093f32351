// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qhl/linalg.hpp"

namespace qhl {

/// CPTP map in Choi form. The Choi matrix is indexed input-major:
/// J = sum_{ij} |i><j|_in (x) Phi(|i><j|)_out, so row index = i*d_out + k.
struct QuantumChannel {
  int in_qubits = 0;
  int out_qubits = 0;
  ComplexMatrix choi;

  Eigen::Index in_dim() const { return Eigen::Index{1} << in_qubits; }
  Eigen::Index out_dim() const { return Eigen::Index{1} << out_qubits; }
};

/// Running tally of every CPTP validation performed in this process.
/// Exposed so a test suite can assert, at the end, that no channel produced
/// anywhere violated positivity or trace preservation.
struct CptpAuditRecord {
  std::size_t channels_checked = 0;
  double worst_min_eigenvalue = 0.0;  // most negative Choi eigenvalue seen
  double worst_tp_deviation = 0.0;    // largest |Tr_out(J) - I| entry seen
};

QuantumChannel channel_from_unitary(const ComplexMatrix& u);
QuantumChannel channel_from_kraus(const std::vector<ComplexMatrix>& kraus,
                                  int in_qubits, int out_qubits);
QuantumChannel identity_channel(int num_qubits);

/// b after a: returns the map rho -> b(a(rho)).
QuantumChannel channel_compose(const QuantumChannel& b,
                               const QuantumChannel& a);
/// Channel composed with itself `k` times (k >= 1), by repeated squaring of
/// the superoperator.
QuantumChannel channel_power(const QuantumChannel& c, long long k);

DensityMatrix channel_apply(const QuantumChannel& c, const DensityMatrix& rho);

/// (1/2) * ||Choi(a) - Choi(b)||_tr / 2^in_qubits.
double channel_distance(const QuantumChannel& a, const QuantumChannel& b);

ComplexMatrix choi_to_superop(const QuantumChannel& c);
QuantumChannel superop_to_choi(const ComplexMatrix& s, int in_qubits,
                               int out_qubits);

/// Choi positivity + trace preservation check; records the result in the
/// global audit. Throws contract_error when out of tolerance.
void validate_cptp(const QuantumChannel& c, double psd_tol = kPsdTol,
                   double tp_tol = 1e-10);

CptpAuditRecord cptp_audit();
void reset_cptp_audit();

}  // namespace qhl
