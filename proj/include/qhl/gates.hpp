// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qhl/linalg.hpp"

namespace qhl {

enum class GateKind : std::uint8_t { H, S, Sdg, W, Wdg, T, Tdg, CNOT };

constexpr std::array<GateKind, 8> kAllGateKinds = {
    GateKind::H, GateKind::S, GateKind::Sdg, GateKind::W,
    GateKind::Wdg, GateKind::T, GateKind::Tdg, GateKind::CNOT};

/// 2x2 matrix for single-qubit kinds, 4x4 for CNOT (control = first qubit).
const ComplexMatrix& gate_matrix(GateKind kind);
GateKind gate_inverse(GateKind kind);
bool is_two_qubit(GateKind kind);

const std::string& gate_token(GateKind kind);
/// Parses one of "H","S","Sdg","W","Wdg","T","Tdg","CNOT"; throws input_error.
GateKind gate_from_token(const std::string& token);

/// Tally in the order (H, S, W, CNOT, T); dagger variants fold into their
/// base kind.
struct GateCountVector {
  long long h = 0;
  long long s = 0;
  long long w = 0;
  long long cnot = 0;
  long long t = 0;

  GateCountVector& operator+=(const GateCountVector& o);
  friend GateCountVector operator+(GateCountVector a,
                                   const GateCountVector& b) {
    return a += b;
  }
  friend bool operator==(const GateCountVector&,
                         const GateCountVector&) = default;

  long long total() const { return h + s + w + cnot + t; }
  std::string str() const;
};

GateCountVector count_one(GateKind kind);

/// Per-application operator-norm error budget, same component order.
struct GateErrorVector {
  double eps_h = 0.0;
  double eps_s = 0.0;
  double eps_w = 0.0;
  double eps_cnot = 0.0;
  double eps_t = 0.0;

  static GateErrorVector uniform(double eps) {
    return GateErrorVector{eps, eps, eps, eps, eps};
  }
};

double count_dot(const GateErrorVector& errs, const GateCountVector& counts);

}  // namespace qhl
