// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0
//
// JSON batch files: either explicit amplitude lists
//   { "n_qubits": N, "states": [[[re, im], ...], ...], "t_data": 1.0 }
// or +/-1 pattern rows, which are amplitude-encoded on load
//   { "patterns": [[1, -1, ...], ...], "t_data": 1.0 }

#pragma once

#include <string>

#include "qhl/bcqse.hpp"
#include "qhl/hebbian.hpp"

namespace qhl {

TrainingBatch load_batch_file(const std::string& path);
PatternSet load_pattern_file(const std::string& path);
void write_batch_file(const TrainingBatch& batch, const std::string& path);

}  // namespace qhl
