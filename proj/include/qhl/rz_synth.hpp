// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhl/gates.hpp"
#include "qhl/linalg.hpp"

namespace qhl {

/// Clifford+T approximation of e^{-i tau Z}.
struct SynthesisResult {
  std::vector<GateKind> sequence;
  double achieved_error = 0.0;  // phase-invariant operator norm
  GateCountVector counts;
  double target_tau = 0.0;
};

/// Analytic per-rotation gate-count model: one synthesized Z-rotation costs
/// (3 g_eta, 2 g_eta, g_const, 0, 3 g_eta) with g_eta = ceil(c_log *
/// log2(1/eta)). Both constants are configuration, not measurements.
struct CountModel {
  double c_log = 3.0;
  double g_const = 10.0;
};

long long count_model_g(double eta, const CountModel& model = CountModel{});
GateCountVector result1_counts(long long g_eta, long long g_const);

ComplexMatrix rz_matrix(double tau);  // e^{-i tau Z}

/// Meet-in-the-middle search over single-qubit Clifford+T words. The table
/// holds every element of T-count <= t_budget_per_factor once (Matsumoto-
/// Amano normal forms), keyed by its projective-unitary quaternion; a query
/// splits the target as w1*w2 across two table entries.
class RzSynthesizer {
 public:
  explicit RzSynthesizer(int t_budget_per_factor = 15);

  /// Returns the lowest-T-count table solution meeting eta, with trailing W
  /// gates aligning the global phase to the nearest pi/4. Exact targets
  /// (tau a multiple of pi/8) short-circuit to exact sequences. Throws
  /// precision_unreachable_error naming the reachable floor when eta is
  /// below every candidate.
  SynthesisResult synthesize(double tau, double eta) const;

  int t_budget() const { return 2 * t_budget_per_factor_; }
  std::size_t table_size() const { return table_.size(); }
  /// Distinct-entry sanity scan: pairs of table entries closer than tol in
  /// the phase-invariant metric (should be zero).
  std::size_t near_duplicate_count(double tol = 1e-9) const;

 private:
  struct Entry {
    std::array<double, 4> q;
    std::int32_t core;
    std::int8_t cliff;
    std::uint8_t tcost;
  };
  struct Core {
    std::int32_t parent;
    std::int8_t kind;  // 0 root-empty, 1 root-T, 2 syllable HT, 3 syllable SHT
  };

  std::vector<GateKind> matrix_word(std::int32_t entry_index) const;
  void probe(const std::array<double, 4>& q, double radius,
             std::vector<std::int32_t>& out) const;
  SynthesisResult synthesize_uncached(double tau, double eta) const;

  int t_budget_per_factor_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<double, double>, SynthesisResult> cache_;
  std::vector<Core> cores_;
  std::vector<Entry> table_;
  std::vector<std::vector<GateKind>> cliff_words_;
  std::vector<std::int32_t> brute_indices_;  // low-T entries paired exhaustively
  std::unordered_map<std::uint64_t, std::vector<std::int32_t>> grid_;
};

/// Process-wide synthesizer at the default budget, built on first use.
const RzSynthesizer& shared_synthesizer();

}  // namespace qhl
