// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include "qhl/cpswap.hpp"

#include <string>

#include "qhl/errors.hpp"

namespace qhl {
namespace {

constexpr int kMaxRegisterQubits = 5;  // keeps 2N + 2 wires within the cap

void check_spec(const CPSwapSpec& spec) {
  if (spec.n_qubits_per_register < 1 ||
      spec.n_qubits_per_register > kMaxRegisterQubits) {
    throw contract_error("cpswap: register size " +
                         std::to_string(spec.n_qubits_per_register) +
                         " outside [1, " + std::to_string(kMaxRegisterQubits) +
                         "]");
  }
  if (!(spec.synthesis_eta > 0.0)) {
    throw contract_error("cpswap: synthesis_eta must be positive");
  }
}

}  // namespace

CPSwapWires cpswap_wires(int n_qubits_per_register) {
  CPSwapWires w;
  w.learning = 0;
  w.a_first = 1;
  w.b_first = 1 + n_qubits_per_register;
  w.ancilla = 1 + 2 * n_qubits_per_register;
  return w;
}

ComplexMatrix exact_cpswap(const CPSwapSpec& spec) {
  check_spec(spec);
  const int n = spec.n_qubits_per_register;
  ComplexMatrix swap = swap_operator(n);
  return controlled_exp_hermitian(swap, spec.theta);
}

CPSwapBuild build_cpswap_circuit(const CPSwapSpec& spec) {
  check_spec(spec);
  const int n = spec.n_qubits_per_register;
  const CPSwapWires w = cpswap_wires(n);
  const int nq = 2 * n + 2;

  const RzSynthesizer& synth = shared_synthesizer();
  CPSwapBuild build;
  build.rot_first = synth.synthesize(spec.theta / 2.0, spec.synthesis_eta);
  // The opposite rotation is the exact sequence inverse, so the two cancel
  // identically when the learning qubit is |0> and the control-0 block stays
  // the identity regardless of synthesis error.
  build.rot_second.sequence.reserve(build.rot_first.sequence.size());
  for (auto it = build.rot_first.sequence.rbegin();
       it != build.rot_first.sequence.rend(); ++it) {
    build.rot_second.sequence.push_back(gate_inverse(*it));
  }
  build.rot_second.achieved_error = build.rot_first.achieved_error;
  build.rot_second.target_tau = -spec.theta / 2.0;
  for (GateKind g : build.rot_second.sequence) {
    build.rot_second.counts += count_one(g);
  }

  Circuit c = make_circuit(nq, "cpswap");
  // Pairwise basis change: sends the singlet of (a_k, b_k) to |11> so that
  // a_k AND b_k flags the antisymmetric component.
  for (int k = 0; k < n; ++k) {
    c.add(GateKind::CNOT, w.b_first + k, w.a_first + k);
    c = concat(c, controlled_ry_pi4_template(nq, w.a_first + k,
                                             w.b_first + k, -1));
  }
  // Accumulate the joint singlet parity on the ancilla.
  for (int k = 0; k < n; ++k) {
    c = concat(c, toffoli_template(nq, w.a_first + k, w.b_first + k,
                                   w.ancilla));
  }
  // Controlled phase e^{-i theta Z} between learning qubit and ancilla.
  c = concat(c, controlled_rz_template(nq, w.learning, w.ancilla,
                                       build.rot_first.sequence,
                                       build.rot_second.sequence));
  // Mirror: uncompute parity, undo the basis change.
  for (int k = n - 1; k >= 0; --k) {
    c = concat(c, toffoli_template(nq, w.a_first + k, w.b_first + k,
                                   w.ancilla));
  }
  for (int k = n - 1; k >= 0; --k) {
    c = concat(c, controlled_ry_pi4_template(nq, w.a_first + k,
                                             w.b_first + k, +1));
    c.add(GateKind::CNOT, w.b_first + k, w.a_first + k);
  }
  c.label = "cpswap";
  build.circuit = std::move(c);
  return build;
}

GateCountVector cpswap_count_formula(int n_qubits_per_register,
                                     long long g_eta, long long g_const) {
  if (n_qubits_per_register < 1) {
    throw contract_error("cpswap_count_formula: register size must be >= 1");
  }
  if (g_eta < 0 || g_const < 0) {
    throw contract_error("cpswap_count_formula: negative count input");
  }
  const long long n = n_qubits_per_register;
  GateCountVector v;
  v.h = 12 * n + 6 * g_eta;
  v.s = 10 * n + 4 * g_eta;
  v.w = 2 * g_const;
  v.cnot = 18 * n + 2;
  v.t = 18 * n + 6 * g_eta;
  return v;
}

GateCountVector cpswap_count_with_rotations(int n_qubits_per_register,
                                            const GateCountVector& rot_sum) {
  if (n_qubits_per_register < 1) {
    throw contract_error(
        "cpswap_count_with_rotations: register size must be >= 1");
  }
  const long long n = n_qubits_per_register;
  GateCountVector v;
  v.h = 12 * n;
  v.s = 10 * n;
  v.w = 0;
  v.cnot = 18 * n + 2;
  v.t = 18 * n;
  return v + rot_sum;
}

}  // namespace qhl
