// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qhl {

// Bad user-supplied data: malformed files, dimension mismatches, invalid
// parameter ranges. Maps to CLI exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical contract was violated (non-unitary compile result, CPTP
// failure, ...). Maps to CLI exit code 1.
class contract_error : public std::runtime_error {
 public:
  explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested synthesis precision is below what the bounded search can reach.
// Maps to CLI exit code 3.
class precision_unreachable_error : public std::runtime_error {
 public:
  precision_unreachable_error(const std::string& what, double reachable_floor,
                              int t_count_budget)
      : std::runtime_error(what),
        reachable_floor(reachable_floor),
        t_count_budget(t_count_budget) {}

  double reachable_floor;
  int t_count_budget;
};

}  // namespace qhl
