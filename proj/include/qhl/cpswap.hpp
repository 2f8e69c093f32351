// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0
//
// Controlled partial swap: the block unitary |0><0| (x) I + |1><1| (x)
// e^{-i theta S} on a learning qubit and two N-qubit registers, both as an
// exact matrix oracle and as a Clifford+T circuit built from the Y-rotation,
// Toffoli, and controlled-Rz templates plus two synthesized rotations.

#pragma once

#include <utility>

#include "qhl/circuit.hpp"
#include "qhl/gates.hpp"
#include "qhl/linalg.hpp"
#include "qhl/rz_synth.hpp"

namespace qhl {

struct CPSwapSpec {
  int n_qubits_per_register = 1;  // N, registers a and b each hold N qubits
  double theta = 0.0;             // partial swap angle
  double synthesis_eta = 1e-3;    // accuracy for the two central rotations
};

// Wire layout used by build_cpswap_circuit: learning qubit on wire 0,
// register a on wires 1..N, register b on wires N+1..2N, scratch ancilla
// (|0> in, |0> out) on wire 2N+1.
struct CPSwapWires {
  int learning = 0;
  int a_first = 1;
  int b_first = 2;
  int ancilla = 3;
};
CPSwapWires cpswap_wires(int n_qubits_per_register);

/// Exact |0><0| (x) I + |1><1| (x) e^{-i theta S_N} on 1 + 2N qubits
/// (learning qubit most significant, no ancilla).
ComplexMatrix exact_cpswap(const CPSwapSpec& spec);

struct CPSwapBuild {
  Circuit circuit;               // on 2N + 2 wires, ancilla included
  SynthesisResult rot_first;     // e^{-i (theta/2) Z} factor
  SynthesisResult rot_second;    // e^{+i (theta/2) Z} factor
};

/// Compile the controlled partial swap over the Clifford+T alphabet.
CPSwapBuild build_cpswap_circuit(const CPSwapSpec& spec);

/// Closed-form gate count (h, s, w, cnot, t) for the compiled circuit when
/// each rotation is charged at the count model (3g, 2g, g_const, 0, 3g).
GateCountVector cpswap_count_formula(int n_qubits_per_register,
                                     long long g_eta, long long g_const);

/// Same bookkeeping with the two rotations' actual counts substituted.
GateCountVector cpswap_count_with_rotations(int n_qubits_per_register,
                                            const GateCountVector& rot_sum);

}  // namespace qhl
