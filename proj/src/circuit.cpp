// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include "qhl/circuit.hpp"

#include <fstream>
#include <sstream>

#include "qhl/errors.hpp"

namespace qhl {

namespace {

void check_gate(const Circuit& c, const PlacedGate& g) {
  if (is_two_qubit(g.kind)) {
    if (g.q0 < 0 || g.q0 >= c.num_qubits || g.q1 < 0 ||
        g.q1 >= c.num_qubits || g.q0 == g.q1) {
      throw contract_error("circuit: CNOT needs two distinct in-range wires");
    }
  } else {
    if (g.q0 < 0 || g.q0 >= c.num_qubits || g.q1 != -1) {
      throw contract_error("circuit: single-qubit gate needs one in-range"
                           " wire");
    }
  }
}

// Applies one gate in place to every column of m (each column treated as a
// state), bit-twiddling over basis indices. Qubit 0 is the most significant
// bit, so wire q addresses bit (num_qubits-1-q).
void apply_gate_columns(const Circuit& c, const PlacedGate& g,
                        ComplexMatrix& m) {
  const Eigen::Index dim = m.rows();
  const int nq = c.num_qubits;
  if (is_two_qubit(g.kind)) {
    const Eigen::Index cbit = Eigen::Index{1} << (nq - 1 - g.q0);
    const Eigen::Index tbit = Eigen::Index{1} << (nq - 1 - g.q1);
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      for (Eigen::Index b = 0; b < dim; ++b) {
        if ((b & cbit) && !(b & tbit)) {
          std::swap(m(b, col), m(b | tbit, col));
        }
      }
    }
    return;
  }
  const ComplexMatrix& u = gate_matrix(g.kind);
  const Eigen::Index tbit = Eigen::Index{1} << (nq - 1 - g.q0);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      if (b & tbit) continue;
      Complex a0 = m(b, col);
      Complex a1 = m(b | tbit, col);
      m(b, col) = u(0, 0) * a0 + u(0, 1) * a1;
      m(b | tbit, col) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

}  // namespace

void Circuit::add(GateKind kind, int q0, int q1) {
  PlacedGate g{kind, q0, q1};
  check_gate(*this, g);
  gates.push_back(g);
}

Circuit make_circuit(int num_qubits, std::string label) {
  if (num_qubits < 1) {
    throw contract_error("make_circuit: need at least one qubit");
  }
  Circuit c;
  c.num_qubits = num_qubits;
  c.label = std::move(label);
  return c;
}

ComplexMatrix compile_unitary(const Circuit& c) {
  const Eigen::Index dim = Eigen::Index{1} << c.num_qubits;
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const PlacedGate& g : c.gates) {
    check_gate(c, g);
    apply_gate_columns(c, g, u);
  }
  return u;
}

GateCountVector gate_count(const Circuit& c) {
  GateCountVector v;
  for (const PlacedGate& g : c.gates) v += count_one(g.kind);
  return v;
}

StateVector apply_to_state(const Circuit& c, const StateVector& psi) {
  if (psi.num_qubits != c.num_qubits) {
    throw contract_error("apply_to_state: qubit count mismatch");
  }
  ComplexMatrix m = psi.amplitudes;
  for (const PlacedGate& g : c.gates) {
    check_gate(c, g);
    apply_gate_columns(c, g, m);
  }
  return StateVector{c.num_qubits, ComplexVector(m.col(0))};
}

DensityMatrix apply_to_density(const Circuit& c, const DensityMatrix& rho) {
  if (rho.num_qubits != c.num_qubits) {
    throw contract_error("apply_to_density: qubit count mismatch");
  }
  ComplexMatrix u = compile_unitary(c);
  ComplexMatrix out = u * rho.matrix * u.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return make_density(c.num_qubits, std::move(out), /*check_psd=*/false);
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.num_qubits != b.num_qubits) {
    throw contract_error("concat: qubit count mismatch");
  }
  Circuit c = a;
  c.gates.insert(c.gates.end(), b.gates.begin(), b.gates.end());
  return c;
}

Circuit inverse(const Circuit& c) {
  Circuit inv = make_circuit(c.num_qubits, c.label.empty()
                                               ? std::string()
                                               : c.label + "_inverse");
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    inv.gates.push_back(PlacedGate{gate_inverse(it->kind), it->q0, it->q1});
  }
  return inv;
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  if (!c.label.empty()) out << "# " << c.label << "\n";
  out << "qubits " << c.num_qubits << "\n";
  for (const PlacedGate& g : c.gates) {
    out << gate_token(g.kind) << " " << g.q0;
    if (is_two_qubit(g.kind)) out << " " << g.q1;
    out << "\n";
  }
  return out.str();
}

Circuit from_text(const std::string& text, const std::string& label) {
  std::istringstream in(text);
  std::string line;
  Circuit c;
  c.label = label;
  bool have_qubits = false;
  int lineno = 0;
  std::vector<PlacedGate> pending;
  int max_wire = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "qubits") {
      int n = 0;
      if (!(ls >> n) || n < 1) {
        throw input_error("circuit line " + std::to_string(lineno) +
                          ": bad qubit count");
      }
      if (have_qubits) {
        throw input_error("circuit line " + std::to_string(lineno) +
                          ": duplicate qubits declaration");
      }
      c.num_qubits = n;
      have_qubits = true;
      continue;
    }
    GateKind kind = gate_from_token(head);
    PlacedGate g{kind, -1, -1};
    if (!(ls >> g.q0)) {
      throw input_error("circuit line " + std::to_string(lineno) +
                        ": missing wire index");
    }
    if (is_two_qubit(kind) && !(ls >> g.q1)) {
      throw input_error("circuit line " + std::to_string(lineno) +
                        ": CNOT needs two wire indices");
    }
    std::string extra;
    if (ls >> extra) {
      throw input_error("circuit line " + std::to_string(lineno) +
                        ": trailing token \"" + extra + "\"");
    }
    max_wire = std::max({max_wire, g.q0, g.q1});
    pending.push_back(g);
  }
  if (!have_qubits) c.num_qubits = max_wire + 1;
  if (c.num_qubits < 1) {
    throw input_error("circuit file declares no qubits and has no gates");
  }
  for (const PlacedGate& g : pending) {
    try {
      check_gate(c, g);
    } catch (const contract_error& e) {
      throw input_error(e.what());
    }
    c.gates.push_back(g);
  }
  return c;
}

Circuit read_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open circuit file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str(), path);
}

void write_circuit_file(const Circuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write circuit file " + path);
  out << to_text(c);
}

Circuit controlled_ry_pi4_template(int num_qubits, int control, int target,
                                   int sign) {
  if (sign != 1 && sign != -1) {
    throw contract_error("controlled_ry_pi4_template: sign must be ±1");
  }
  Circuit c = make_circuit(num_qubits, "cry_pi4");
  // sign=-1 enacts controlled e^{+i(pi/4)Y}; +1 swaps T and Tdg for the
  // other rotation sense.
  GateKind first = (sign == -1) ? GateKind::T : GateKind::Tdg;
  GateKind second = (sign == -1) ? GateKind::Tdg : GateKind::T;
  c.add(GateKind::S, target);
  c.add(GateKind::H, target);
  c.add(first, target);
  c.add(GateKind::H, target);
  c.add(GateKind::Sdg, target);
  c.add(GateKind::CNOT, control, target);
  c.add(GateKind::S, target);
  c.add(GateKind::H, target);
  c.add(second, target);
  c.add(GateKind::H, target);
  c.add(GateKind::Sdg, target);
  c.add(GateKind::CNOT, control, target);
  return c;
}

Circuit toffoli_template(int num_qubits, int c1, int c2, int target) {
  Circuit c = make_circuit(num_qubits, "toffoli");
  c.add(GateKind::H, target);
  c.add(GateKind::CNOT, c2, target);
  c.add(GateKind::Tdg, target);
  c.add(GateKind::CNOT, c1, target);
  c.add(GateKind::T, target);
  c.add(GateKind::CNOT, c2, target);
  c.add(GateKind::Tdg, target);
  c.add(GateKind::CNOT, c1, target);
  c.add(GateKind::Tdg, c2);
  c.add(GateKind::T, target);
  c.add(GateKind::CNOT, c1, c2);
  c.add(GateKind::H, target);
  c.add(GateKind::Tdg, c2);
  c.add(GateKind::CNOT, c1, c2);
  c.add(GateKind::T, c1);
  c.add(GateKind::S, c2);
  return c;
}

Circuit controlled_rz_template(int num_qubits, int control, int target,
                               const std::vector<GateKind>& minus_half,
                               const std::vector<GateKind>& plus_half) {
  Circuit c = make_circuit(num_qubits, "crz");
  for (GateKind k : minus_half) c.add(k, target);
  c.add(GateKind::CNOT, control, target);
  for (GateKind k : plus_half) c.add(k, target);
  c.add(GateKind::CNOT, control, target);
  return c;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix exact_controlled(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) {
    throw contract_error("exact_controlled: matrix is not square");
  }
  Eigen::Index d = u.rows();
  ComplexMatrix out = ComplexMatrix::Identity(2 * d, 2 * d);
  out.block(d, d, d, d) = u;
  return out;
}

ComplexMatrix exact_toffoli() {
  ComplexMatrix m = ComplexMatrix::Identity(8, 8);
  m(6, 6) = 0;
  m(7, 7) = 0;
  m(6, 7) = 1;
  m(7, 6) = 1;
  return m;
}

}  // namespace qhl
