// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include "qhl/hebbian.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qhl/errors.hpp"
#include "qhl/rz_synth.hpp"

namespace qhl {
namespace {

int log2_exact(size_t value, const char* who) {
  if (value == 0 || (value & (value - 1)) != 0) {
    throw input_error(std::string(who) + ": length must be a power of two");
  }
  int bits = 0;
  while ((size_t(1) << bits) < value) ++bits;
  return bits;
}

// Shared by the strict and lenient paths; rows arrive rescaled so that
// sum_i y_i^2 = d, matching the +/-1 normalization in the W definition.
HebbianWeights weights_from_rows(const std::vector<std::vector<double>>& rows,
                                 int dim) {
  HebbianWeights hw;
  hw.dim = dim;
  hw.w = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& row : rows) {
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        if (i != j) hw.w(i, j) += row[size_t(i)] * row[size_t(j)];
      }
    }
  }
  hw.w /= static_cast<double>(rows.size()) * static_cast<double>(dim);
  return hw;
}

double identity_residual(const TrainingBatch& batch,
                         const HebbianWeights& weights) {
  const DensityMatrix rho = ensemble_state(batch);
  const int d = weights.dim;
  ComplexMatrix r = rho.matrix -
                    ComplexMatrix::Identity(d, d) / static_cast<double>(d) -
                    weights.w.cast<Complex>();
  return op_norm(r);
}

}  // namespace

PatternSet make_pattern_set(std::vector<std::vector<int>> patterns) {
  if (patterns.empty()) {
    throw input_error("pattern set: empty batch");
  }
  PatternSet set;
  const int dim = static_cast<int>(patterns[0].size());
  log2_exact(patterns[0].size(), "pattern set");
  for (const auto& row : patterns) {
    if (static_cast<int>(row.size()) != dim) {
      throw input_error("pattern set: rows have unequal lengths");
    }
    for (int v : row) {
      if (v != 1 && v != -1) {
        throw input_error("pattern set: entries must be +1 or -1");
      }
    }
  }
  set.dim = dim;
  set.patterns = std::move(patterns);
  return set;
}

HebbianWeights build_weight_matrix(const PatternSet& set) {
  if (set.patterns.empty()) {
    throw input_error("build_weight_matrix: empty pattern set");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(set.patterns.size());
  for (const auto& p : set.patterns) {
    rows.emplace_back(p.begin(), p.end());
  }
  return weights_from_rows(rows, set.dim);
}

StateVector amplitude_encode(const std::vector<int>& pattern) {
  const int bits = log2_exact(pattern.size(), "amplitude_encode");
  for (int v : pattern) {
    if (v != 1 && v != -1) {
      throw input_error("amplitude_encode: entries must be +1 or -1");
    }
  }
  StateVector s;
  s.num_qubits = bits;
  s.amplitudes.resize(static_cast<Eigen::Index>(pattern.size()));
  const double scale = 1.0 / std::sqrt(static_cast<double>(pattern.size()));
  for (size_t i = 0; i < pattern.size(); ++i) {
    s.amplitudes(static_cast<Eigen::Index>(i)) =
        Complex(pattern[i] * scale, 0.0);
  }
  return s;
}

TrainingBatch encode_pattern_batch(const PatternSet& set, double t_data) {
  if (set.patterns.empty()) {
    throw input_error("encode_pattern_batch: empty pattern set");
  }
  std::vector<StateVector> states;
  states.reserve(set.patterns.size());
  for (const auto& p : set.patterns) {
    states.push_back(amplitude_encode(p));
  }
  const int bits = log2_exact(static_cast<size_t>(set.dim),
                              "encode_pattern_batch");
  return make_batch(bits, std::move(states), t_data);
}

double quantum_hebbian_identity_check(const PatternSet& set) {
  return identity_residual(encode_pattern_batch(set),
                           build_weight_matrix(set));
}

Circuit identity_phase_correction(double delta_t, int dim, double eta) {
  if (dim < 1) {
    throw contract_error("identity_phase_correction: dimension must be >= 1");
  }
  const double tau = delta_t / (2.0 * static_cast<double>(dim));
  const SynthesisResult rz = shared_synthesizer().synthesize(tau, eta);
  Circuit c = make_circuit(1, "identity_phase_correction");
  for (GateKind g : rz.sequence) {
    c.add(g, 0);
  }
  return c;
}

LenientEncoding encode_real_patterns(
    const std::vector<std::vector<double>>& rows, double t_data) {
  if (rows.empty()) {
    throw input_error("encode_real_patterns: empty batch");
  }
  const int dim = static_cast<int>(rows[0].size());
  const int bits = log2_exact(rows[0].size(), "encode_real_patterns");
  const double root_d = std::sqrt(static_cast<double>(dim));

  std::vector<StateVector> states;
  std::vector<std::vector<double>> rescaled;
  states.reserve(rows.size());
  rescaled.reserve(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim) {
      throw input_error("encode_real_patterns: rows have unequal lengths");
    }
    double norm = 0.0;
    for (double v : row) norm += v * v;
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) {
      throw input_error("encode_real_patterns: zero row cannot be encoded");
    }
    StateVector s;
    s.num_qubits = bits;
    s.amplitudes.resize(dim);
    std::vector<double> y(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      s.amplitudes(i) = Complex(row[size_t(i)] / norm, 0.0);
      y[size_t(i)] = row[size_t(i)] * root_d / norm;
    }
    states.push_back(std::move(s));
    rescaled.push_back(std::move(y));
  }

  LenientEncoding out;
  out.batch = make_batch(bits, std::move(states), t_data);
  out.weights = weights_from_rows(rescaled, dim);
  out.identity_residual = identity_residual(out.batch, out.weights);
  return out;
}

}  // namespace qhl
