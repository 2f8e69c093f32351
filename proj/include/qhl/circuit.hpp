// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qhl/gates.hpp"
#include "qhl/linalg.hpp"

namespace qhl {

/// One gate placed on wires. q0 is the single-qubit target, or the CNOT
/// control; q1 is the CNOT target (-1 otherwise).
struct PlacedGate {
  GateKind kind;
  int q0 = 0;
  int q1 = -1;

  friend bool operator==(const PlacedGate&, const PlacedGate&) = default;
};

/// Ordered gate list over num_qubits wires; gates[0] is applied first.
struct Circuit {
  int num_qubits = 0;
  std::vector<PlacedGate> gates;
  std::string label;

  void add(GateKind kind, int q0, int q1 = -1);
};

Circuit make_circuit(int num_qubits, std::string label = "");

/// Ordered product of embedded gate matrices, first gate rightmost.
ComplexMatrix compile_unitary(const Circuit& c);
GateCountVector gate_count(const Circuit& c);

StateVector apply_to_state(const Circuit& c, const StateVector& psi);
DensityMatrix apply_to_density(const Circuit& c, const DensityMatrix& rho);

Circuit concat(const Circuit& a, const Circuit& b);
/// Reversed gate order with each gate inverted; compiles to the adjoint.
Circuit inverse(const Circuit& c);

/// One gate per line, "KIND q0 [q1]", '#' starts a comment; blank lines
/// ignored. A leading "qubits <n>" line fixes the wire count.
std::string to_text(const Circuit& c);
Circuit from_text(const std::string& text, const std::string& label = "");
Circuit read_circuit_file(const std::string& path);
void write_circuit_file(const Circuit& c, const std::string& path);

// ---- fixed Clifford+T templates ----

/// Controlled e^{-i s (pi/4) Y} on (control, target), s = ±1, where
/// Y = [[0, -i], [i, 0]]. Tallies (4,4,0,2,2); the two signs differ only by
/// swapping T and Tdg.
Circuit controlled_ry_pi4_template(int num_qubits, int control, int target,
                                   int sign);
/// Doubly-controlled X on (c1, c2, target); tallies (2,1,0,6,7).
Circuit toffoli_template(int num_qubits, int c1, int c2, int target);
/// Controlled e^{-i tau Z} on (control, target) with the two half-angle
/// Z-rotations supplied by the caller as synthesized gate sequences
/// (minus_half enacts e^{-i(tau/2)Z}, plus_half enacts e^{+i(tau/2)Z}).
Circuit controlled_rz_template(int num_qubits, int control, int target,
                               const std::vector<GateKind>& minus_half,
                               const std::vector<GateKind>& plus_half);

// Exact 2x2 / 4x4 / 8x8 oracles for template verification.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix exact_controlled(const ComplexMatrix& u);
ComplexMatrix exact_toffoli();

}  // namespace qhl
