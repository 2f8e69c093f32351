// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0
//
// Iterative (Kitaev-style) phase estimation driven by the bcQSE channel:
// one reusable learning qubit, powers 2^k of the base evolution, exact
// expectation-value readout or seeded single-shot trajectories, and the
// resource scaling report for eigenvalue extraction at accuracy epsilon.

#pragma once

#include <cstdint>
#include <vector>

#include "qhl/bcqse.hpp"
#include "qhl/linalg.hpp"

namespace qhl {

struct PEConfig {
  double t0 = 3.14159265358979323846;  // base time; eigenvalue lambda maps
                                       // to phase fraction f = lambda / 2
  bool use_ideal_channel = false;      // substitute the exact target unitary
};

struct PhaseEstimateResult {
  double estimated_eigenvalue = 0.0;
  int precision_bits = 0;
  double input_overlap = 0.0;     // input weight on the matched eigenspace
  bool resolution_warning = false;
  std::vector<double> stage_phases;  // measured phase fraction per power k
};

/// Exact-expectation Kitaev estimation with bits+1 stages (k = 0..bits);
/// power k runs the protocol at t = t0 2^k with n scaled by 4^k.
PhaseEstimateResult kitaev_phase_estimate(const TrainingBatch& batch,
                                          const StateVector& input, int bits,
                                          const ProtocolParams& params,
                                          const PEConfig& config = PEConfig{});

struct ShotRecord {
  double estimate = 0.0;        // eigenvalue from this trajectory
  std::vector<int> bits;        // measured bits, least significant first
  DensityMatrix post_state;     // processing register after the last round
};

/// Seeded single-shot iterative estimation with phase feedback on the
/// learning qubit; the processing register evolves (and collapses) across
/// rounds within each shot.
std::vector<ShotRecord> sample_phase_estimates(
    const TrainingBatch& batch, const StateVector& input, int bits,
    const ProtocolParams& params, int shots, std::uint64_t seed,
    const PEConfig& config = PEConfig{});

struct PEResourceReport {
  long long unitary_applications = 0;  // ceil(c_apps / eps)
  long long n_per_application = 0;     // ceil(c_batches / eps^2)
  long long total_batches = 0;         // product of the two
  double qubit_estimate = 0.0;         // Theta-tilde(M N / eps^3)
  double gate_estimate = 0.0;          // same up to the synthesis log factor
  long long learning_qubits_serial = 1;    // measured and reused
  long long learning_qubits_parallel = 0;  // one per application
};

PEResourceReport pe_resource_report(double epsilon, long long copies,
                                    int n_qubits, double c_apps = 1.0,
                                    double c_batches = 1.0);

}  // namespace qhl
