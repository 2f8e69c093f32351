// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include "qhl/phase_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "qhl/circuit.hpp"
#include "qhl/errors.hpp"

namespace qhl {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEigTol = 1e-9;  // eigenvalue degeneracy grouping

double frac(double x) { return x - std::floor(x); }

double cyclic_distance(double a, double b) {
  const double d = std::abs(frac(a) - frac(b));
  return std::min(d, 1.0 - d);
}

void check_pe_inputs(const TrainingBatch& batch, const StateVector& input,
                     int bits, const ProtocolParams& params) {
  if (bits < 1 || bits > 24) {
    throw contract_error("phase estimation: bits outside [1, 24]");
  }
  if (input.num_qubits != batch.n_qubits) {
    throw input_error("phase estimation: input register size mismatch");
  }
  if (params.n < 1) {
    throw contract_error("phase estimation: base n must be >= 1");
  }
}

// Channel for one application at power p = 2^k: evolution time t0 p with the
// repetition count scaled by p^2 so the batching error per stage is flat.
QuantumChannel stage_channel(const TrainingBatch& batch,
                             const ProtocolParams& params,
                             const PEConfig& config, int k) {
  const double t = config.t0 * static_cast<double>(1LL << k);
  if (config.use_ideal_channel) {
    return target_channel(batch, t);
  }
  ProtocolParams stage = params;
  stage.t = t;
  stage.n = params.n * (1LL << (2 * k));
  return run_bcqse(batch, stage);
}

// Per-stage phase noise (cycles) from the error model, times the number of
// stages, against the 1/4-cycle bit-selection margin.
bool resolution_warning(const ProtocolParams& params, const PEConfig& config,
                        int bits) {
  if (config.use_ideal_channel) return false;
  const double stage_noise =
      config.t0 * config.t0 / static_cast<double>(params.n) / kTwoPi;
  return static_cast<double>(bits + 1) * stage_noise >= 0.25;
}

DensityMatrix plus_times(const DensityMatrix& proc) {
  ComplexMatrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  DensityMatrix out;
  out.num_qubits = proc.num_qubits + 1;
  out.matrix = kron(plus, proc.matrix);
  return out;
}

}  // namespace

PhaseEstimateResult kitaev_phase_estimate(const TrainingBatch& batch,
                                          const StateVector& input, int bits,
                                          const ProtocolParams& params,
                                          const PEConfig& config) {
  check_pe_inputs(batch, input, bits, params);
  const Eigen::Index d = input.amplitudes.size();
  const ComplexMatrix xl = kron(pauli_x(), ComplexMatrix::Identity(d, d));
  const ComplexMatrix yl = kron(pauli_y(), ComplexMatrix::Identity(d, d));

  DensityMatrix proc;
  proc.num_qubits = batch.n_qubits;
  proc.matrix = input.amplitudes * input.amplitudes.adjoint();

  PhaseEstimateResult result;
  result.precision_bits = bits;
  result.resolution_warning = resolution_warning(params, config, bits);
  result.stage_phases.resize(static_cast<size_t>(bits) + 1);
  for (int k = 0; k <= bits; ++k) {
    const QuantumChannel c = stage_channel(batch, params, config, k);
    const DensityMatrix sigma = channel_apply(c, plus_times(proc));
    const double ex = (xl.cwiseProduct(sigma.matrix.transpose())).sum().real();
    const double ey = (yl.cwiseProduct(sigma.matrix.transpose())).sum().real();
    result.stage_phases[static_cast<size_t>(k)] =
        frac(std::atan2(-ey, ex) / kTwoPi);
  }

  // Reconstruct f = lambda/2 from the top power down: each stage halves the
  // running estimate and the measured phase picks the consistent branch.
  double alpha = result.stage_phases[static_cast<size_t>(bits)];
  for (int k = bits - 1; k >= 0; --k) {
    const double c0 = alpha / 2.0;
    const double c1 = (alpha + 1.0) / 2.0;
    const double w = result.stage_phases[static_cast<size_t>(k)];
    alpha = (cyclic_distance(c0, w) <= cyclic_distance(c1, w)) ? c0 : c1;
  }
  result.estimated_eigenvalue = 2.0 * alpha;

  const DensityMatrix rho = ensemble_state(batch);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix);
  double best = std::abs(es.eigenvalues()(0) - result.estimated_eigenvalue);
  for (Eigen::Index i = 1; i < es.eigenvalues().size(); ++i) {
    best = std::min(best,
                    std::abs(es.eigenvalues()(i) - result.estimated_eigenvalue));
  }
  double overlap = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (std::abs(es.eigenvalues()(i) - result.estimated_eigenvalue) <=
        best + kEigTol) {
      overlap += std::norm(es.eigenvectors().col(i).dot(input.amplitudes));
    }
  }
  result.input_overlap = overlap;
  return result;
}

std::vector<ShotRecord> sample_phase_estimates(
    const TrainingBatch& batch, const StateVector& input, int bits,
    const ProtocolParams& params, int shots, std::uint64_t seed,
    const PEConfig& config) {
  check_pe_inputs(batch, input, bits, params);
  if (shots < 1) {
    throw contract_error("sample_phase_estimates: shots must be >= 1");
  }
  const int rounds = bits + 1;
  const Eigen::Index d = input.amplitudes.size();

  std::vector<QuantumChannel> stage;  // index j-1 holds power 2^(j-1)
  stage.reserve(static_cast<size_t>(rounds));
  for (int j = 1; j <= rounds; ++j) {
    stage.push_back(stage_channel(batch, params, config, j - 1));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
  ComplexMatrix hadamard(2, 2);
  const double inv_root2 = 1.0 / std::sqrt(2.0);
  hadamard << inv_root2, inv_root2, inv_root2, -inv_root2;

  std::vector<ShotRecord> records;
  records.reserve(static_cast<size_t>(shots));
  for (int shot = 0; shot < shots; ++shot) {
    DensityMatrix proc;
    proc.num_qubits = batch.n_qubits;
    proc.matrix = input.amplitudes * input.amplitudes.adjoint();
    double omega = 0.0;  // previously fixed bits, as a phase fraction
    ShotRecord rec;
    for (int r = 0; r < rounds; ++r) {
      const int j = rounds - r;  // measure bit j, least significant first
      DensityMatrix sigma =
          channel_apply(stage[static_cast<size_t>(j - 1)], plus_times(proc));
      ComplexMatrix feedback(2, 2);
      feedback << 1.0, 0.0, 0.0,
          std::exp(Complex(0.0, std::numbers::pi * omega));
      const ComplexMatrix basis = kron(hadamard * feedback, eye);
      sigma.matrix = basis * sigma.matrix * basis.adjoint();

      const double p0 =
          std::clamp(sigma.matrix.topLeftCorner(d, d).trace().real(), 0.0,
                     1.0);
      int bit = unit(rng) < p0 ? 0 : 1;
      double pb = bit == 0 ? p0 : 1.0 - p0;
      if (pb < 1e-15) {  // nullified branch: take the certain outcome
        bit = 1 - bit;
        pb = 1.0 - pb;
      }
      ComplexMatrix block = bit == 0 ? sigma.matrix.topLeftCorner(d, d)
                                     : sigma.matrix.bottomRightCorner(d, d);
      block /= pb;
      proc.matrix = 0.5 * (block + block.adjoint().eval());
      rec.bits.push_back(bit);
      omega = (static_cast<double>(bit) + omega) / 2.0;
    }
    rec.estimate = 2.0 * omega;
    rec.post_state = proc;
    records.push_back(std::move(rec));
  }
  return records;
}

PEResourceReport pe_resource_report(double epsilon, long long copies,
                                    int n_qubits, double c_apps,
                                    double c_batches) {
  if (!(epsilon > 0.0) || epsilon >= 1.0) {
    throw contract_error("pe_resource_report: epsilon must be in (0, 1)");
  }
  if (copies < 1 || n_qubits < 1) {
    throw contract_error("pe_resource_report: invalid batch shape");
  }
  PEResourceReport rep;
  rep.unitary_applications =
      static_cast<long long>(std::ceil(c_apps / epsilon));
  rep.n_per_application =
      static_cast<long long>(std::ceil(c_batches / (epsilon * epsilon)));
  rep.total_batches = rep.unitary_applications * rep.n_per_application;
  const double raw = static_cast<double>(rep.total_batches) *
                     static_cast<double>(copies) *
                     static_cast<double>(n_qubits);
  rep.qubit_estimate = raw;
  const double eta =
      std::min(0.5, epsilon / (static_cast<double>(rep.total_batches) *
                               static_cast<double>(copies)));
  const long long g = count_model_g(eta);
  rep.gate_estimate =
      static_cast<double>(rep.total_batches) * static_cast<double>(copies) *
      static_cast<double>(cpswap_count_formula(n_qubits, g, 10).total());
  rep.learning_qubits_serial = 1;
  rep.learning_qubits_parallel = rep.unitary_applications;
  return rep;
}

}  // namespace qhl
