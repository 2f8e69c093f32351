// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0

#include "qhl/batch_io.hpp"

#include <fstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qhl/errors.hpp"

namespace qhl {
namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw input_error("batch file: cannot open '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw input_error("batch file '" + path + "': " + e.what());
  }
  if (!j.is_object()) {
    throw input_error("batch file '" + path + "': top level must be an object");
  }
  return j;
}

Complex parse_amplitude(const json& a, const std::string& path) {
  if (a.is_number()) {
    return Complex(a.get<double>(), 0.0);
  }
  if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number()) {
    return Complex(a[0].get<double>(), a[1].get<double>());
  }
  throw input_error("batch file '" + path +
                    "': amplitudes must be numbers or [re, im] pairs");
}

double parse_t_data(const json& j, const std::string& path) {
  if (!j.contains("t_data")) return 1.0;
  if (!j["t_data"].is_number()) {
    throw input_error("batch file '" + path + "': t_data must be a number");
  }
  return j["t_data"].get<double>();
}

std::vector<std::vector<int>> parse_patterns(const json& j,
                                             const std::string& path) {
  const json& rows = j["patterns"];
  if (!rows.is_array()) {
    throw input_error("batch file '" + path + "': patterns must be an array");
  }
  if (rows.empty()) {
    throw input_error("batch file '" + path + "': empty batch");
  }
  std::vector<std::vector<int>> out;
  out.reserve(rows.size());
  for (const json& row : rows) {
    if (!row.is_array()) {
      throw input_error("batch file '" + path +
                        "': each pattern must be an array");
    }
    std::vector<int> p;
    p.reserve(row.size());
    for (const json& v : row) {
      if (!v.is_number_integer()) {
        throw input_error("batch file '" + path +
                          "': pattern entries must be integers");
      }
      p.push_back(v.get<int>());
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TrainingBatch load_batch_file(const std::string& path) {
  const json j = parse_file(path);
  const double t_data = parse_t_data(j, path);

  if (j.contains("patterns")) {
    PatternSet set = make_pattern_set(parse_patterns(j, path));
    return encode_pattern_batch(set, t_data);
  }
  if (!j.contains("states")) {
    throw input_error("batch file '" + path +
                      "': expected a 'states' or 'patterns' field");
  }
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer()) {
    throw input_error("batch file '" + path +
                      "': 'states' form requires integer n_qubits");
  }
  const int n_qubits = j["n_qubits"].get<int>();
  if (n_qubits < 1) {
    throw input_error("batch file '" + path + "': n_qubits must be >= 1");
  }
  const json& rows = j["states"];
  if (!rows.is_array()) {
    throw input_error("batch file '" + path + "': states must be an array");
  }
  if (rows.empty()) {
    throw input_error("batch file '" + path + "': empty batch");
  }
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  std::vector<StateVector> states;
  states.reserve(rows.size());
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw input_error("batch file '" + path +
                        "': state length does not match n_qubits");
    }
    StateVector s;
    s.num_qubits = n_qubits;
    s.amplitudes.resize(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      s.amplitudes(i) = parse_amplitude(row[static_cast<size_t>(i)], path);
    }
    states.push_back(std::move(s));
  }
  return make_batch(n_qubits, std::move(states), t_data);
}

PatternSet load_pattern_file(const std::string& path) {
  const json j = parse_file(path);
  if (!j.contains("patterns")) {
    throw input_error("batch file '" + path + "': expected a 'patterns' field");
  }
  return make_pattern_set(parse_patterns(j, path));
}

void write_batch_file(const TrainingBatch& batch, const std::string& path) {
  json j;
  j["n_qubits"] = batch.n_qubits;
  j["t_data"] = batch.t_data;
  json rows = json::array();
  for (const StateVector& s : batch.states) {
    json row = json::array();
    for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
      row.push_back({s.amplitudes(i).real(), s.amplitudes(i).imag()});
    }
    rows.push_back(std::move(row));
  }
  j["states"] = std::move(rows);
  std::ofstream out(path);
  if (!out) {
    throw input_error("batch file: cannot write '" + path + "'");
  }
  out << j.dump(2) << "\n";
}

}  // namespace qhl
