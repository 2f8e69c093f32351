// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0
//
// Batched controlled quantum state exponentiation: simulate the protocol
// that enacts |0><0| (x) I + |1><1| (x) e^{-i t rho} from n rounds over an
// M-copy training batch, plus its error model, the optimal round count, and
// logical/physical resource accounting.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhl/channel.hpp"
#include "qhl/cpswap.hpp"
#include "qhl/gates.hpp"
#include "qhl/linalg.hpp"
#include "qhl/rz_synth.hpp"

namespace qhl {

struct TrainingBatch {
  int n_qubits = 0;                 // N, qubits per data copy
  std::vector<StateVector> states;  // the M batch entries, in protocol order
  double t_data = 1.0;              // declared cost of one oracle call

  long long copies() const { return static_cast<long long>(states.size()); }
};

/// Validates dimensions and normalization (1e-10) before accepting.
TrainingBatch make_batch(int n_qubits, std::vector<StateVector> states,
                         double t_data = 1.0);

/// rho = (1/M) sum_m |x_m><x_m|.
DensityMatrix ensemble_state(const TrainingBatch& batch);

enum class SwapMode {
  ideal_swap,        // exact e^{-i theta S} oracle, N <= 3
  compiled_circuit,  // Clifford+T compiled partial swap, N = 1
};

std::string swap_mode_name(SwapMode mode);
SwapMode swap_mode_from_name(const std::string& name);

struct ProtocolParams {
  double t = 1.0;               // target evolution time
  long long n = 1;              // batch repetitions
  SwapMode mode = SwapMode::ideal_swap;
  double synthesis_eta = 1e-3;  // rotation accuracy in compiled mode
};

/// Channel on (learning + simulation register) from one partial swap with a
/// fresh data copy |x>, tracing the copy (and scratch ancilla) back out.
QuantumChannel single_swap_channel(const StateVector& x, double theta,
                                   SwapMode mode, double synthesis_eta = 1e-3);

/// Full protocol: n repetitions of the M-copy batch at theta = t / (n M).
QuantumChannel run_bcqse(const TrainingBatch& batch,
                         const ProtocolParams& params);

/// Ideal target: unitary channel of |0><0| (x) I + |1><1| (x) e^{-i t rho}.
QuantumChannel target_channel(const TrainingBatch& batch, double t);

struct ErrorModelParams {
  double alpha = 1.0;             // batching error prefactor
  GateErrorVector gate_errors;    // per-gate-type error rates
  double eta = 1e-3;              // rotation synthesis accuracy
  long long copies = 1;           // M
  int n_qubits = 1;               // N
  long long g_eta = 0;            // synthesized gates per rotation at eta
  long long g_const = 10;         // rotation phase-correction W count

  /// eps_g . g(eta) + 2 eta, the per-controlled-partial-swap error term.
  double per_swap_cost() const;
};

/// epsilon(t, n) = alpha t^2 / n + n M (eps_g . g(eta) + 2 eta).
double error_model(const ErrorModelParams& params, double t, long long n);

struct OptimalRounds {
  long long n = 1;          // clamped integer minimizer
  double unclamped = 0.0;   // t sqrt(alpha / (M cost))
  bool failure_regime = false;  // unclamped < 1: gate noise dominates
};

/// Minimizer of error_model over integer n >= 1.
OptimalRounds optimal_rounds(const ErrorModelParams& params, double t);

/// 2 t sqrt(alpha M cost), the continuum minimum of the error model.
double optimal_error(const ErrorModelParams& params, double t);

enum class ResourceRegime { fixed, error_corrected };

struct ResourceConfig {
  double alpha = 1.0;          // assumed batching prefactor
  double eta_fixed = 1e-3;     // fixed-regime rotation accuracy
  double eps_g_fixed = 1e-4;   // fixed-regime uniform per-gate error
  double delta_prime = 0.1;    // EC budget share for rotation error
  double delta_dprime = 0.1;   // EC budget share for gate error
  double batch_constant = 1.0; // EC regime: n = ceil(C (t^2 + 1) / eps)
  CountModel count_model;
};

struct ResourceReport {
  ResourceRegime regime = ResourceRegime::fixed;
  long long n = 1;
  double eta = 0.0;                // rotation accuracy in force
  long long g_eta = 0;
  double eps_g = 0.0;              // uniform per-gate error in force
  GateCountVector swap_gates;      // g(eta) for one controlled partial swap
  long long logical_qubits = 0;    // (n M + 1)(N + 1)
  double logical_gates = 0.0;      // n M total swap gates
  long long overhead_factor = 1;   // ceil(log2(1 / eps_g)) in EC regime
  double physical_qubits = 0.0;
  double physical_gates = 0.0;
  long long data_oracle_calls = 0; // n M
  double data_oracle_cost = 0.0;   // n M t_data
  double predicted_error = 0.0;
  bool failure_regime = false;
};

ResourceReport resource_report(int n_qubits, long long copies, double t,
                               double epsilon, ResourceRegime regime,
                               double t_data = 1.0,
                               const ResourceConfig& config = ResourceConfig{});

struct AlphaFit {
  double alpha = 0.0;            // least-squares slope of err*n against t^2
  std::vector<double> ts;
  std::vector<double> errors;    // measured channel distances
  double max_residual = 0.0;     // worst |err*n - alpha t^2|
};

/// Fit the quadratic error prefactor from simulated protocol runs.
AlphaFit fit_alpha(const TrainingBatch& batch, const std::vector<double>& ts,
                   long long n, SwapMode mode, double synthesis_eta = 1e-3);

}  // namespace qhl
