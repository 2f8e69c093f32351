// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include "qhl/gates.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "qhl/errors.hpp"

namespace qhl {

namespace {

ComplexMatrix build_gate(GateKind kind) {
  const double r = 1.0 / std::numbers::sqrt2;
  const Complex i(0.0, 1.0);
  const Complex w = std::exp(Complex(0.0, std::numbers::pi / 4.0));
  ComplexMatrix m;
  switch (kind) {
    case GateKind::H:
      m.resize(2, 2);
      m << r, r, r, -r;
      return m;
    case GateKind::S:
      m.resize(2, 2);
      m << 1, 0, 0, i;
      return m;
    case GateKind::Sdg:
      m.resize(2, 2);
      m << 1, 0, 0, -i;
      return m;
    case GateKind::W:
      m.resize(2, 2);
      m << w, 0, 0, w;
      return m;
    case GateKind::Wdg:
      m.resize(2, 2);
      m << std::conj(w), 0, 0, std::conj(w);
      return m;
    case GateKind::T:
      m.resize(2, 2);
      m << 1, 0, 0, w;
      return m;
    case GateKind::Tdg:
      m.resize(2, 2);
      m << 1, 0, 0, std::conj(w);
      return m;
    case GateKind::CNOT:
      m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      return m;
  }
  throw contract_error("build_gate: unknown kind");
}

}  // namespace

const ComplexMatrix& gate_matrix(GateKind kind) {
  static const std::map<GateKind, ComplexMatrix> table = [] {
    std::map<GateKind, ComplexMatrix> t;
    for (GateKind k : kAllGateKinds) t.emplace(k, build_gate(k));
    return t;
  }();
  return table.at(kind);
}

GateKind gate_inverse(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return GateKind::H;
    case GateKind::S:
      return GateKind::Sdg;
    case GateKind::Sdg:
      return GateKind::S;
    case GateKind::W:
      return GateKind::Wdg;
    case GateKind::Wdg:
      return GateKind::W;
    case GateKind::T:
      return GateKind::Tdg;
    case GateKind::Tdg:
      return GateKind::T;
    case GateKind::CNOT:
      return GateKind::CNOT;
  }
  throw contract_error("gate_inverse: unknown kind");
}

bool is_two_qubit(GateKind kind) { return kind == GateKind::CNOT; }

const std::string& gate_token(GateKind kind) {
  static const std::map<GateKind, std::string> table = {
      {GateKind::H, "H"},     {GateKind::S, "S"},   {GateKind::Sdg, "Sdg"},
      {GateKind::W, "W"},     {GateKind::Wdg, "Wdg"}, {GateKind::T, "T"},
      {GateKind::Tdg, "Tdg"}, {GateKind::CNOT, "CNOT"}};
  return table.at(kind);
}

GateKind gate_from_token(const std::string& token) {
  for (GateKind k : kAllGateKinds) {
    if (gate_token(k) == token) return k;
  }
  throw input_error("unknown gate token \"" + token + "\"");
}

GateCountVector& GateCountVector::operator+=(const GateCountVector& o) {
  h += o.h;
  s += o.s;
  w += o.w;
  cnot += o.cnot;
  t += o.t;
  return *this;
}

std::string GateCountVector::str() const {
  return "(" + std::to_string(h) + ", " + std::to_string(s) + ", " +
         std::to_string(w) + ", " + std::to_string(cnot) + ", " +
         std::to_string(t) + ")";
}

GateCountVector count_one(GateKind kind) {
  GateCountVector v;
  switch (kind) {
    case GateKind::H:
      v.h = 1;
      break;
    case GateKind::S:
    case GateKind::Sdg:
      v.s = 1;
      break;
    case GateKind::W:
    case GateKind::Wdg:
      v.w = 1;
      break;
    case GateKind::T:
    case GateKind::Tdg:
      v.t = 1;
      break;
    case GateKind::CNOT:
      v.cnot = 1;
      break;
  }
  return v;
}

double count_dot(const GateErrorVector& errs, const GateCountVector& counts) {
  return errs.eps_h * static_cast<double>(counts.h) +
         errs.eps_s * static_cast<double>(counts.s) +
         errs.eps_w * static_cast<double>(counts.w) +
         errs.eps_cnot * static_cast<double>(counts.cnot) +
         errs.eps_t * static_cast<double>(counts.t);
}

}  // namespace qhl
