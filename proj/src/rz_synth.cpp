// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include "qhl/rz_synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qhl/circuit.hpp"
#include "qhl/errors.hpp"

namespace qhl {

namespace {

constexpr double kCell = 0.025;          // hash-grid cell side
constexpr double kProbeRadius = 0.00625; // meet-in-the-middle probe window
constexpr int kBruteTCost = 5;           // exhaustively paired low-cost entries

// Unit quaternion (a,b,c,d) <-> SU(2) element a*I - i(b*X + c*Y + d*Z), so
// quaternion products track matrix products and |<q1,q2>| = |Tr(U1^dag U2)|/2.
struct Quat {
  double a, b, c, d;
};

Quat qmul(const Quat& p, const Quat& q) {
  return Quat{p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
              p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
              p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
              p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

Quat qconj(const Quat& q) { return Quat{q.a, -q.b, -q.c, -q.d}; }

double qdot(const Quat& p, const Quat& q) {
  return p.a * q.a + p.b * q.b + p.c * q.c + p.d * q.d;
}

double qdot(const std::array<double, 4>& p, const Quat& q) {
  return p[0] * q.a + p[1] * q.b + p[2] * q.c + p[3] * q.d;
}

// Canonical projective representative: the largest-magnitude component is
// made positive, so +q and -q store identically.
std::array<double, 4> canonical(const Quat& q) {
  std::array<double, 4> v{q.a, q.b, q.c, q.d};
  int imax = 0;
  for (int i = 1; i < 4; ++i) {
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  }
  if (v[imax] < 0) {
    for (double& x : v) x = -x;
  }
  return v;
}

Quat quat_from_su2(const ComplexMatrix& u) {
  Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  Complex s = std::sqrt(det);
  ComplexMatrix m = u / s;
  // a*I - i(bX + cY + dZ) = [[a-id, -c-ib], [c-ib, a+id]]
  Quat q;
  q.a = 0.5 * (m(0, 0).real() + m(1, 1).real());
  q.d = 0.5 * (m(1, 1).imag() - m(0, 0).imag());
  q.c = 0.5 * (m(1, 0).real() - m(0, 1).real());
  q.b = -0.5 * (m(0, 1).imag() + m(1, 0).imag());
  double n = std::sqrt(q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d);
  q.a /= n;
  q.b /= n;
  q.c /= n;
  q.d /= n;
  return q;
}

double pair_error(double abs_dot) {
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::min(1.0, abs_dot)));
}

std::uint64_t cell_key(int k0, int k1, int k2, int k3) {
  return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(k0)) << 48) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(k1)) << 32) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(k2)) << 16) |
         static_cast<std::uint64_t>(static_cast<std::uint16_t>(k3));
}

int cell_coord(double x) {
  return static_cast<int>(std::floor((x + 2.0) / kCell));
}

const std::vector<GateKind>& exact_pi8_sequence(int k) {
  static const std::vector<GateKind> seqs[8] = {
      {},
      {GateKind::T},
      {GateKind::S},
      {GateKind::S, GateKind::T},
      {GateKind::S, GateKind::S},
      {GateKind::Sdg, GateKind::Tdg},
      {GateKind::Sdg},
      {GateKind::Tdg}};
  return seqs[k];
}

ComplexMatrix compile_single_qubit(const std::vector<GateKind>& seq) {
  Circuit c = make_circuit(1);
  for (GateKind g : seq) c.add(g, 0);
  return compile_unitary(c);
}

// Appends W/Wdg gates aligning the global phase of u to the target's, to the
// nearest pi/4 (ties resolve toward fewer gates).
void append_phase_ws(std::vector<GateKind>& seq, const ComplexMatrix& u,
                     const ComplexMatrix& target) {
  Complex tr = (u.adjoint() * target).trace();
  if (std::abs(tr) < 1e-14) return;
  double phi = std::arg(tr);
  long long k = static_cast<long long>(
      std::floor(phi / (std::numbers::pi / 4.0) + 0.5));
  int m = static_cast<int>(((k % 8) + 8) % 8);
  if (m == 0) return;
  if (m <= 4) {
    for (int i = 0; i < m; ++i) seq.push_back(GateKind::W);
  } else {
    for (int i = 0; i < 8 - m; ++i) seq.push_back(GateKind::Wdg);
  }
}

}  // namespace

long long count_model_g(double eta, const CountModel& model) {
  if (!(eta > 0.0) || eta >= 1.0) {
    throw contract_error("count_model_g: eta must lie in (0, 1)");
  }
  double x = model.c_log * std::log2(1.0 / eta);
  double r = std::round(x);
  if (std::abs(x - r) < 1e-9) return static_cast<long long>(r);
  return static_cast<long long>(std::ceil(x));
}

GateCountVector result1_counts(long long g_eta, long long g_const) {
  GateCountVector v;
  v.h = 3 * g_eta;
  v.s = 2 * g_eta;
  v.w = g_const;
  v.cnot = 0;
  v.t = 3 * g_eta;
  return v;
}

ComplexMatrix rz_matrix(double tau) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = std::exp(Complex(0.0, -tau));
  m(1, 1) = std::exp(Complex(0.0, tau));
  return m;
}

RzSynthesizer::RzSynthesizer(int t_budget_per_factor)
    : t_budget_per_factor_(t_budget_per_factor) {
  if (t_budget_per_factor < 1 || t_budget_per_factor > 16) {
    throw contract_error("RzSynthesizer: factor budget out of range");
  }
  // The 24 projective Cliffords as shortest words over {H, S, Sdg}.
  std::vector<Quat> cliff_q;
  {
    const GateKind alphabet[3] = {GateKind::H, GateKind::S, GateKind::Sdg};
    Quat gq[3];
    for (int i = 0; i < 3; ++i) gq[i] = quat_from_su2(gate_matrix(alphabet[i]));
    cliff_words_.push_back({});
    cliff_q.push_back(Quat{1, 0, 0, 0});
    for (std::size_t head = 0; head < cliff_words_.size(); ++head) {
      for (int i = 0; i < 3; ++i) {
        Quat cand = qmul(cliff_q[head], gq[i]);
        bool known = false;
        for (const Quat& seen : cliff_q) {
          if (std::abs(qdot(seen, cand)) > 1.0 - 1e-9) {
            known = true;
            break;
          }
        }
        if (known) continue;
        std::vector<GateKind> w = cliff_words_[head];
        w.push_back(alphabet[i]);
        cliff_words_.push_back(std::move(w));
        cliff_q.push_back(cand);
      }
    }
    if (cliff_words_.size() != 24) {
      throw contract_error("RzSynthesizer: Clifford closure has " +
                           std::to_string(cliff_words_.size()) +
                           " elements, expected 24");
    }
  }

  // Matsumoto-Amano cores (T|eps)(HT|SHT)^m, each group element once.
  const Quat q_t = quat_from_su2(gate_matrix(GateKind::T));
  const Quat q_ht = qmul(quat_from_su2(gate_matrix(GateKind::H)), q_t);
  const Quat q_sht = qmul(quat_from_su2(gate_matrix(GateKind::S)), q_ht);

  std::vector<Quat> core_q;
  std::vector<std::uint8_t> core_t;
  cores_.push_back(Core{-1, 0});  // empty root
  core_q.push_back(Quat{1, 0, 0, 0});
  core_t.push_back(0);
  cores_.push_back(Core{-1, 1});  // leading-T root, T-count 1
  core_q.push_back(q_t);
  core_t.push_back(1);
  std::size_t prev_begin = 0, prev_end = 1;  // the empty root
  for (int level = 1; level <= t_budget_per_factor_; ++level) {
    std::size_t next_begin = cores_.size();
    for (std::size_t i = prev_begin; i < prev_end; ++i) {
      cores_.push_back(Core{static_cast<std::int32_t>(i), 2});
      core_q.push_back(qmul(core_q[i], q_ht));
      core_t.push_back(static_cast<std::uint8_t>(level));
      cores_.push_back(Core{static_cast<std::int32_t>(i), 3});
      core_q.push_back(qmul(core_q[i], q_sht));
      core_t.push_back(static_cast<std::uint8_t>(level));
    }
    if (level == 1) {
      // the leading-T root also has T-count 1 and seeds the next level
      prev_begin = 1;
    } else {
      prev_begin = next_begin;
    }
    prev_end = cores_.size();
  }

  table_.reserve(cores_.size() * 24);
  grid_.reserve(cores_.size() * 24);
  for (std::size_t ci = 0; ci < cores_.size(); ++ci) {
    for (int cl = 0; cl < 24; ++cl) {
      Quat q = qmul(core_q[ci], cliff_q[static_cast<std::size_t>(cl)]);
      Entry e;
      e.q = canonical(q);
      e.core = static_cast<std::int32_t>(ci);
      e.cliff = static_cast<std::int8_t>(cl);
      e.tcost = core_t[ci];
      std::int32_t idx = static_cast<std::int32_t>(table_.size());
      table_.push_back(e);
      grid_[cell_key(cell_coord(e.q[0]), cell_coord(e.q[1]),
                     cell_coord(e.q[2]), cell_coord(e.q[3]))]
          .push_back(idx);
      if (e.tcost <= kBruteTCost) brute_indices_.push_back(idx);
    }
  }
}

void RzSynthesizer::probe(const std::array<double, 4>& q, double radius,
                          std::vector<std::int32_t>& out) const {
  int lo[4], hi[4];
  for (int i = 0; i < 4; ++i) {
    lo[i] = cell_coord(q[i] - radius);
    hi[i] = cell_coord(q[i] + radius);
  }
  for (int k0 = lo[0]; k0 <= hi[0]; ++k0) {
    for (int k1 = lo[1]; k1 <= hi[1]; ++k1) {
      for (int k2 = lo[2]; k2 <= hi[2]; ++k2) {
        for (int k3 = lo[3]; k3 <= hi[3]; ++k3) {
          auto it = grid_.find(cell_key(k0, k1, k2, k3));
          if (it == grid_.end()) continue;
          out.insert(out.end(), it->second.begin(), it->second.end());
        }
      }
    }
  }
}

std::vector<GateKind> RzSynthesizer::matrix_word(
    std::int32_t entry_index) const {
  const Entry& e = table_[static_cast<std::size_t>(entry_index)];
  std::vector<std::int8_t> chain;
  for (std::int32_t c = e.core; c >= 0; c = cores_[c].parent) {
    chain.push_back(cores_[c].kind);
  }
  std::vector<GateKind> word;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    switch (*it) {
      case 0:
        break;
      case 1:
        word.push_back(GateKind::T);
        break;
      case 2:
        word.push_back(GateKind::H);
        word.push_back(GateKind::T);
        break;
      case 3:
        word.push_back(GateKind::S);
        word.push_back(GateKind::H);
        word.push_back(GateKind::T);
        break;
    }
  }
  const auto& cw = cliff_words_[static_cast<std::size_t>(e.cliff)];
  word.insert(word.end(), cw.begin(), cw.end());
  return word;
}

std::size_t RzSynthesizer::near_duplicate_count(double tol) const {
  std::size_t count = 0;
  std::vector<std::int32_t> hits;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    hits.clear();
    probe(table_[i].q, 2 * tol + 1e-12, hits);
    probe({-table_[i].q[0], -table_[i].q[1], -table_[i].q[2],
           -table_[i].q[3]},
          2 * tol + 1e-12, hits);
    for (std::int32_t j : hits) {
      if (static_cast<std::size_t>(j) <= i) continue;
      double dot = std::abs(
          table_[i].q[0] * table_[j].q[0] + table_[i].q[1] * table_[j].q[1] +
          table_[i].q[2] * table_[j].q[2] + table_[i].q[3] * table_[j].q[3]);
      if (pair_error(dot) < tol) ++count;
    }
  }
  return count;
}

SynthesisResult RzSynthesizer::synthesize(double tau, double eta) const {
  if (!(eta > 0.0)) {
    throw contract_error("synthesize_rz: eta must be positive");
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find({tau, eta});
    if (it != cache_.end()) return it->second;
  }
  SynthesisResult r = synthesize_uncached(tau, eta);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(std::make_pair(tau, eta), r);
  return r;
}

SynthesisResult RzSynthesizer::synthesize_uncached(double tau,
                                                   double eta) const {
  const ComplexMatrix target = rz_matrix(tau);

  auto finish = [&](std::vector<GateKind> seq) {
    ComplexMatrix u = compile_single_qubit(seq);
    append_phase_ws(seq, u, target);
    ComplexMatrix final_u = compile_single_qubit(seq);
    SynthesisResult r;
    r.achieved_error = phase_invariant_distance(final_u, target);
    r.target_tau = tau;
    Circuit c = make_circuit(1);
    for (GateKind g : seq) c.add(g, 0);
    r.counts = gate_count(c);
    r.sequence = std::move(seq);
    return r;
  };

  // tau a multiple of pi/8: the rotation is a power of T.
  const double step = std::numbers::pi / 8.0;
  double kreal = std::round(tau / step);
  if (std::abs(tau - kreal * step) <= 1e-12 &&
      std::abs(kreal) < 9.0e15) {
    long long k = static_cast<long long>(kreal);
    int km = static_cast<int>(((k % 8) + 8) % 8);
    SynthesisResult r = finish(exact_pi8_sequence(km));
    if (r.achieved_error > eta) {
      throw precision_unreachable_error(
          "synthesize_rz: eta " + std::to_string(eta) +
              " below the exact-sequence floor",
          r.achieved_error, t_budget());
    }
    return r;
  }

  const Quat qt{std::cos(tau), 0.0, 0.0, std::sin(tau)};
  struct Cand {
    double err = std::numeric_limits<double>::infinity();
    std::int32_t w1 = -1;
    std::int32_t w2 = -1;
  };
  std::vector<Cand> best(static_cast<std::size_t>(t_budget()) + 1);

  auto consider = [&](std::int32_t i1, std::int32_t i2, double abs_dot) {
    const Entry& e1 = table_[static_cast<std::size_t>(i1)];
    const Entry& e2 = table_[static_cast<std::size_t>(i2)];
    std::size_t cost = static_cast<std::size_t>(e1.tcost) + e2.tcost;
    double err = pair_error(abs_dot);
    if (err < best[cost].err) best[cost] = Cand{err, i1, i2};
  };

  // Exhaustive pairing of low-T-count entries covers coarse targets the
  // radius-limited probe below would miss.
  for (std::int32_t i2 : brute_indices_) {
    const Entry& e2 = table_[static_cast<std::size_t>(i2)];
    Quat mid = qmul(qt, qconj(Quat{e2.q[0], e2.q[1], e2.q[2], e2.q[3]}));
    for (std::int32_t i1 : brute_indices_) {
      consider(i1, i2, std::abs(qdot(table_[static_cast<std::size_t>(i1)].q,
                                     mid)));
    }
  }

  // Full meet-in-the-middle sweep: for every right factor w2, look up left
  // factors near target*w2^dag. The candidate set depends only on the
  // target, and the pick below takes the lowest T-count whose running best
  // meets eta, so shrinking eta never worsens the achieved error.
  std::vector<std::int32_t> hits;
  for (std::size_t i2 = 0; i2 < table_.size(); ++i2) {
    const Entry& e2 = table_[i2];
    Quat mid = qmul(qt, qconj(Quat{e2.q[0], e2.q[1], e2.q[2], e2.q[3]}));
    hits.clear();
    // Stored entries are sign-canonicalized, so the match may sit near
    // either +mid or -mid; probe both raw orientations.
    probe({mid.a, mid.b, mid.c, mid.d}, kProbeRadius, hits);
    probe({-mid.a, -mid.b, -mid.c, -mid.d}, kProbeRadius, hits);
    for (std::int32_t i1 : hits) {
      consider(i1, static_cast<std::int32_t>(i2),
               std::abs(qdot(table_[static_cast<std::size_t>(i1)].q, mid)));
    }
  }

  // Selection margin keeps the matrix-level recheck under eta despite the
  // ~1e-14 quaternion roundoff.
  const double eta_eff = eta - 1e-13;
  Cand running;
  for (std::size_t c = 0; c < best.size(); ++c) {
    if (best[c].err < running.err) running = best[c];
    if (running.err <= eta_eff) {
      std::vector<GateKind> seq;
      std::vector<GateKind> s2 = matrix_word(running.w2);
      std::vector<GateKind> s1 = matrix_word(running.w1);
      seq.insert(seq.end(), s2.rbegin(), s2.rend());
      seq.insert(seq.end(), s1.rbegin(), s1.rend());
      return finish(std::move(seq));
    }
  }
  throw precision_unreachable_error(
      "synthesize_rz: eta " + std::to_string(eta) +
          " unreachable within the T-count budget; floor " +
          std::to_string(running.err),
      running.err, t_budget());
}

const RzSynthesizer& shared_synthesizer() {
  static const RzSynthesizer instance(15);
  return instance;
}

}  // namespace qhl
