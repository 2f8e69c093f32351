// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include "qhl/bcqse.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qhl/errors.hpp"

namespace qhl {
namespace {

constexpr int kMaxIdealRegister = 3;     // 1 + 2N simulated qubits
constexpr int kMaxCompiledRegister = 1;  // 2N + 2 compiled wires
constexpr double kNormTol = 1e-10;

void check_batch(const TrainingBatch& batch) {
  if (batch.n_qubits < 1) {
    throw contract_error("bcqse: batch register size must be >= 1");
  }
  if (batch.states.empty()) {
    throw input_error("bcqse: empty batch");
  }
}

}  // namespace

TrainingBatch make_batch(int n_qubits, std::vector<StateVector> states,
                         double t_data) {
  TrainingBatch batch;
  batch.n_qubits = n_qubits;
  batch.states = std::move(states);
  batch.t_data = t_data;
  check_batch(batch);
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  for (const StateVector& s : batch.states) {
    if (s.num_qubits != n_qubits || s.amplitudes.size() != dim) {
      throw input_error("bcqse: batch state dimension mismatch");
    }
    if (std::abs(s.amplitudes.norm() - 1.0) > kNormTol) {
      throw input_error("bcqse: batch state is not normalized");
    }
  }
  if (!(t_data > 0.0)) {
    throw input_error("bcqse: t_data must be positive");
  }
  return batch;
}

DensityMatrix ensemble_state(const TrainingBatch& batch) {
  check_batch(batch);
  const Eigen::Index dim = Eigen::Index(1) << batch.n_qubits;
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (const StateVector& s : batch.states) {
    rho += s.amplitudes * s.amplitudes.adjoint();
  }
  rho /= static_cast<double>(batch.copies());
  return make_density(batch.n_qubits, rho, /*check_psd=*/false);
}

std::string swap_mode_name(SwapMode mode) {
  return mode == SwapMode::ideal_swap ? "ideal_swap" : "compiled_circuit";
}

SwapMode swap_mode_from_name(const std::string& name) {
  if (name == "ideal_swap" || name == "ideal") return SwapMode::ideal_swap;
  if (name == "compiled_circuit" || name == "compiled") {
    return SwapMode::compiled_circuit;
  }
  throw input_error("bcqse: unknown swap mode '" + name + "'");
}

QuantumChannel single_swap_channel(const StateVector& x, double theta,
                                   SwapMode mode, double synthesis_eta) {
  const int n = x.num_qubits;
  if (n < 1) {
    throw contract_error("single_swap_channel: empty data register");
  }
  const int sys_qubits = 1 + n;
  const Eigen::Index sys_dim = Eigen::Index(1) << sys_qubits;

  ComplexMatrix u;
  int env_qubits = 0;
  if (mode == SwapMode::ideal_swap) {
    if (n > kMaxIdealRegister) {
      throw contract_error("single_swap_channel: ideal_swap supports N <= " +
                           std::to_string(kMaxIdealRegister));
    }
    CPSwapSpec spec;
    spec.n_qubits_per_register = n;
    spec.theta = theta;
    u = exact_cpswap(spec);
    env_qubits = n;  // the data copy
  } else {
    if (n > kMaxCompiledRegister) {
      throw contract_error(
          "single_swap_channel: compiled_circuit supports N <= " +
          std::to_string(kMaxCompiledRegister));
    }
    CPSwapSpec spec;
    spec.n_qubits_per_register = n;
    spec.theta = theta;
    spec.synthesis_eta = synthesis_eta;
    u = compile_unitary(build_cpswap_circuit(spec).circuit);
    env_qubits = n + 1;  // data copy plus scratch ancilla
  }

  // Environment (low bits) enters as |x> (tensor |0> for the ancilla) and is
  // traced out: one Kraus operator per environment basis outcome.
  const Eigen::Index env_dim = Eigen::Index(1) << env_qubits;
  const Eigen::Index data_dim = Eigen::Index(1) << n;
  const Eigen::Index anc_dim = env_dim / data_dim;
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<size_t>(env_dim));
  for (Eigen::Index k = 0; k < env_dim; ++k) {
    ComplexMatrix a = ComplexMatrix::Zero(sys_dim, sys_dim);
    for (Eigen::Index r = 0; r < sys_dim; ++r) {
      for (Eigen::Index c = 0; c < sys_dim; ++c) {
        Complex acc(0.0, 0.0);
        for (Eigen::Index j = 0; j < data_dim; ++j) {
          acc += u(r * env_dim + k, c * env_dim + j * anc_dim) *
                 x.amplitudes(j);
        }
        a(r, c) = acc;
      }
    }
    kraus.push_back(std::move(a));
  }
  return channel_from_kraus(kraus, sys_qubits, sys_qubits);
}

QuantumChannel run_bcqse(const TrainingBatch& batch,
                         const ProtocolParams& params) {
  check_batch(batch);
  if (params.n < 1) {
    throw contract_error("run_bcqse: repetition count must be >= 1");
  }
  const double theta =
      params.t / (static_cast<double>(params.n) *
                  static_cast<double>(batch.copies()));
  QuantumChannel round = single_swap_channel(batch.states[0], theta,
                                             params.mode,
                                             params.synthesis_eta);
  for (size_t m = 1; m < batch.states.size(); ++m) {
    round = channel_compose(
        single_swap_channel(batch.states[m], theta, params.mode,
                            params.synthesis_eta),
        round);
  }
  return channel_power(round, params.n);
}

QuantumChannel target_channel(const TrainingBatch& batch, double t) {
  const DensityMatrix rho = ensemble_state(batch);
  return channel_from_unitary(controlled_exp_hermitian(rho.matrix, t));
}

double ErrorModelParams::per_swap_cost() const {
  const GateCountVector g =
      cpswap_count_formula(n_qubits, g_eta, g_const);
  return count_dot(gate_errors, g) + 2.0 * eta;
}

double error_model(const ErrorModelParams& params, double t, long long n) {
  if (n < 1) {
    throw contract_error("error_model: n must be >= 1");
  }
  if (params.alpha < 0.0 || params.copies < 1) {
    throw contract_error("error_model: invalid parameters");
  }
  const double nn = static_cast<double>(n);
  return params.alpha * t * t / nn +
         nn * static_cast<double>(params.copies) * params.per_swap_cost();
}

OptimalRounds optimal_rounds(const ErrorModelParams& params, double t) {
  const double cost = params.per_swap_cost();
  if (!(cost > 0.0)) {
    throw contract_error(
        "optimal_rounds: zero per-swap cost leaves n unbounded");
  }
  OptimalRounds out;
  out.unclamped = t * std::sqrt(params.alpha /
                                (static_cast<double>(params.copies) * cost));
  out.failure_regime = out.unclamped < 1.0;
  const long long lo =
      std::max(1LL, static_cast<long long>(std::floor(out.unclamped)));
  const long long hi =
      std::max(1LL, static_cast<long long>(std::ceil(out.unclamped)));
  out.n = (error_model(params, t, lo) <= error_model(params, t, hi)) ? lo : hi;
  return out;
}

double optimal_error(const ErrorModelParams& params, double t) {
  const double cost = params.per_swap_cost();
  if (!(cost > 0.0)) {
    throw contract_error(
        "optimal_error: zero per-swap cost leaves n unbounded");
  }
  return 2.0 * t *
         std::sqrt(params.alpha * static_cast<double>(params.copies) * cost);
}

ResourceReport resource_report(int n_qubits, long long copies, double t,
                               double epsilon, ResourceRegime regime,
                               double t_data, const ResourceConfig& config) {
  if (n_qubits < 1 || copies < 1) {
    throw contract_error("resource_report: invalid batch shape");
  }
  if (regime == ResourceRegime::error_corrected && !(epsilon > 0.0)) {
    throw contract_error("resource_report: target epsilon must be positive");
  }

  ResourceReport rep;
  rep.regime = regime;
  if (regime == ResourceRegime::fixed) {
    rep.eta = config.eta_fixed;
    rep.eps_g = config.eps_g_fixed;
    rep.g_eta = count_model_g(rep.eta, config.count_model);
    rep.swap_gates = cpswap_count_formula(n_qubits, rep.g_eta,
                                          std::llround(config.count_model.g_const));
    ErrorModelParams em;
    em.alpha = config.alpha;
    em.gate_errors = GateErrorVector::uniform(rep.eps_g);
    em.eta = rep.eta;
    em.copies = copies;
    em.n_qubits = n_qubits;
    em.g_eta = rep.g_eta;
    em.g_const = std::llround(config.count_model.g_const);
    const OptimalRounds opt = optimal_rounds(em, t);
    rep.n = opt.n;
    rep.failure_regime = opt.failure_regime;
    rep.predicted_error = error_model(em, t, rep.n);
    rep.overhead_factor = 1;
  } else {
    const double n_real =
        std::ceil(config.batch_constant * (t * t + 1.0) / epsilon);
    rep.n = static_cast<long long>(n_real);
    const double n2m = n_real * n_real * static_cast<double>(copies);
    rep.eta = config.delta_prime / n2m;
    rep.g_eta = count_model_g(rep.eta, config.count_model);
    rep.swap_gates = cpswap_count_formula(n_qubits, rep.g_eta,
                                          std::llround(config.count_model.g_const));
    rep.eps_g = config.delta_dprime /
                (n2m * static_cast<double>(rep.swap_gates.total()));
    rep.overhead_factor =
        static_cast<long long>(std::ceil(std::log2(1.0 / rep.eps_g)));
    rep.predicted_error = epsilon;
    rep.failure_regime = false;
  }

  const double nm = static_cast<double>(rep.n) * static_cast<double>(copies);
  rep.logical_qubits = (rep.n * copies + 1) * (n_qubits + 1);
  rep.logical_gates = nm * static_cast<double>(rep.swap_gates.total());
  rep.physical_qubits = static_cast<double>(rep.logical_qubits) *
                        static_cast<double>(rep.overhead_factor);
  rep.physical_gates =
      rep.logical_gates * static_cast<double>(rep.overhead_factor);
  rep.data_oracle_calls = rep.n * copies;
  rep.data_oracle_cost = nm * t_data;
  return rep;
}

AlphaFit fit_alpha(const TrainingBatch& batch, const std::vector<double>& ts,
                   long long n, SwapMode mode, double synthesis_eta) {
  if (ts.empty()) {
    throw input_error("fit_alpha: no time samples");
  }
  AlphaFit fit;
  fit.ts = ts;
  double sxy = 0.0;
  double sxx = 0.0;
  for (double t : ts) {
    ProtocolParams params;
    params.t = t;
    params.n = n;
    params.mode = mode;
    params.synthesis_eta = synthesis_eta;
    const double err = channel_distance(run_bcqse(batch, params),
                                        target_channel(batch, t));
    fit.errors.push_back(err);
    const double x = t * t;
    const double y = err * static_cast<double>(n);
    sxy += x * y;
    sxx += x * x;
  }
  if (!(sxx > 0.0)) {
    throw input_error("fit_alpha: time samples must include t != 0");
  }
  fit.alpha = sxy / sxx;
  for (size_t i = 0; i < ts.size(); ++i) {
    fit.max_residual =
        std::max(fit.max_residual,
                 std::abs(fit.errors[i] * static_cast<double>(n) -
                          fit.alpha * ts[i] * ts[i]));
  }
  return fit;
}

}  // namespace qhl
