// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests driving the qhlsim binary (path injected via
// QHLSIM_BINARY). Each run captures stdout+stderr and the exit code.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QHLSIM_BINARY) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (size_t got = std::fread(buf, 1, sizeof(buf), pipe)) {
    r.output.append(buf, got);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Unique scratch file removed on destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& tag) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("qhlsim_cli_" + tag + "_" + std::to_string(counter++)))
                .string();
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }
  void write(const std::string& text) const {
    std::ofstream out(path_);
    out << text;
  }
  std::string read() const {
    std::ifstream in(path_);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

 private:
  std::string path_;
};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("cli: synth emits a well-formed report meeting the target") {
  const RunResult r = run_cli("synth --tau 0.7 --eta 1e-2");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["config"]["subcommand"] == "synth");
  CHECK(j["sequence"].is_array());
  CHECK(j["sequence"].size() > 0);
  CHECK(j["achieved_error"].get<double>() <= 1e-2);
  CHECK(j["counts"]["t"].get<long long>() >= 0);
  CHECK(j["counts"]["total"].get<long long>() ==
        static_cast<long long>(j["sequence"].size()));
}

TEST_CASE("cli: synth below the reachable floor exits 3") {
  const RunResult r = run_cli("synth --tau 0.3 --eta 1e-12");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("unreachable") != std::string::npos);
}

TEST_CASE("cli: decompose writes a circuit that verify accepts") {
  TempFile circuit("circuit");
  const RunResult dec = run_cli("decompose --n 1 --theta 0.37 --eta 1e-3 " +
                                std::string("--circuit-out ") +
                                circuit.path());
  REQUIRE(dec.exit_code == 0);
  const json report = json::parse(dec.output);
  CHECK(report["verified_error"].get<double>() <= 2e-3 + 1e-9);
  CHECK(report["actual_counts"]["cnot"] ==
        report["formula_counts"]["cnot"]);

  const RunResult ver =
      run_cli("verify --circuit " + circuit.path() +
              " --n 1 --theta 0.37 --eta 1e-3");
  REQUIRE(ver.exit_code == 0);
  const json vj = json::parse(ver.output);
  CHECK(vj["within_bound"].get<bool>());
  CHECK(vj["unitarity_residual"].get<double>() <= 1e-9);
  CHECK(vj["counts"] == report["actual_counts"]);
}

TEST_CASE("cli: verify rejects a malformed circuit file with exit 2") {
  TempFile circuit("badcircuit");
  circuit.write("qubits 2\nBOGUS 0\n");
  const RunResult r = run_cli("verify --circuit " + circuit.path());
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli: bcqse-sweep emits configured CSV with decreasing error") {
  TempFile batch("batch");
  batch.write(R"({"n_qubits": 1, "states":
      [[1.0, 0.0], [0.70710678118654752, 0.70710678118654752]],
      "t_data": 1.0})");
  const std::string args = "bcqse-sweep --batch " + batch.path() +
                           " --t 1.0 --n-list 1,2,4,8 --mode ideal";
  const RunResult r = run_cli(args);
  REQUIRE(r.exit_code == 0);
  const std::vector<std::string> lines = split_lines(r.output);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0].rfind("# config:", 0) == 0);
  CHECK(lines[0].find("mode=ideal_swap") != std::string::npos);
  CHECK(lines[0].find("seed=0") != std::string::npos);
  CHECK(lines[1] ==
        "n,choi_distance,op_distance_proxy,predicted_error_model");
  double prev = 1e300;
  for (size_t i = 2; i < lines.size(); ++i) {
    std::stringstream ss(lines[i]);
    std::string cell;
    std::getline(ss, cell, ',');  // n
    std::getline(ss, cell, ',');  // choi_distance
    const double err = std::stod(cell);
    CHECK(err < prev);
    prev = err;
  }

  const RunResult again = run_cli(args);
  CHECK(again.output == r.output);  // same config + seed, byte-identical
}

TEST_CASE("cli: malformed batch file exits 2 naming the file") {
  TempFile batch("broken");
  batch.write("not json");
  const RunResult r =
      run_cli("bcqse-sweep --batch " + batch.path() + " --t 1.0");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find(batch.path()) != std::string::npos);
}

TEST_CASE("cli: alpha-fit recovers a near-unit prefactor") {
  TempFile batch("afit");
  batch.write(R"({"n_qubits": 1, "states": [[1.0, 0.0], [0.0, 1.0]],
      "t_data": 1.0})");
  const RunResult r = run_cli("alpha-fit --batch " + batch.path() +
                              " --t-list 0.25,0.5,1.0 --n 32 --mode ideal");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["alpha"].get<double>() > 0.0);
  CHECK(j["points"].size() == 3);
  CHECK(j["max_residual"].get<double>() < 1.0);
}

TEST_CASE("cli: hebbian writes weights CSV and a loadable batch") {
  TempFile patterns("patterns");
  patterns.write(R"({"patterns": [[1, -1, 1, -1], [1, 1, -1, -1]]})");
  TempFile weights("weights");
  TempFile bout("encoded");
  const RunResult r = run_cli("hebbian --patterns " + patterns.path() +
                              " --weights-out " + weights.path() +
                              " --batch-out " + bout.path());
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["dim"] == 4);
  CHECK(j["copies"] == 2);
  CHECK(j["identity_residual"].get<double>() <= 1e-12);

  const std::vector<std::string> lines = split_lines(weights.read());
  REQUIRE(lines.size() == 6);  // config + header + 4 rows
  CHECK(lines[0].rfind("# config:", 0) == 0);
  CHECK(lines[1] == "w_0,w_1,w_2,w_3");

  const json batch = json::parse(bout.read());
  CHECK(batch["n_qubits"] == 2);
  CHECK(batch["states"].size() == 2);
}

TEST_CASE("cli: empty pattern file exits 2 with an empty-batch diagnostic") {
  TempFile patterns("empty");
  patterns.write(R"({"patterns": []})");
  const RunResult r = run_cli("hebbian --patterns " + patterns.path());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("empty batch") != std::string::npos);
}

TEST_CASE("cli: phase-estimate pins an eigenstate and reports resources") {
  TempFile batch("pe");
  batch.write(R"({"n_qubits": 1, "states": [[0.0, 1.0]], "t_data": 1.0})");
  const RunResult r =
      run_cli("phase-estimate --batch " + batch.path() +
              " --input 1 --bits 4 --ideal-channel");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["estimate"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(j["input_overlap"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(j["per_bit_probs"].size() == 5);
  CHECK(j["resources"]["unitary_applications"] == 16);
  CHECK(j["resources"]["n_per_application"] == 256);
  CHECK(j["resources"]["total_batches"] == 4096);
}

TEST_CASE("cli: phase-estimate shots are seed-deterministic") {
  TempFile batch("peshots");
  batch.write(R"({"n_qubits": 1, "states": [[0.0, 1.0]], "t_data": 1.0})");
  const std::string args = "--seed 7 phase-estimate --batch " + batch.path() +
                           " --input plus --bits 3 --shots 20 --n 64";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  const json j = json::parse(a.output);
  CHECK(j["shots"]["count"] == 20);
  CHECK(j["shots"]["per_bit_freqs"].size() == 4);
}

TEST_CASE("cli: resources reports both regimes consistently") {
  const RunResult fixed =
      run_cli("resources --regime fixed --t 1 --m 2 --n-qubits 1");
  REQUIRE(fixed.exit_code == 0);
  const json fj = json::parse(fixed.output);
  const long long n_fixed = fj["n"].get<long long>();
  CHECK(fj["logical_qubits"].get<long long>() == (n_fixed * 2 + 1) * 2);
  CHECK(fj["eta"].get<double>() == doctest::Approx(1e-3));
  CHECK(fj["overhead_factor"] == 1);

  const RunResult ec = run_cli(
      "resources --regime ec --t 1 --m 3 --n-qubits 1 --epsilon 0.01");
  REQUIRE(ec.exit_code == 0);
  const json ej = json::parse(ec.output);
  CHECK(ej["n"] == 200);  // ceil(C (t^2 + 1) / eps)
  CHECK(ej["logical_qubits"].get<long long>() == (200 * 3 + 1) * 2);
  CHECK(ej["overhead_factor"].get<long long>() > 1);
  CHECK(ej["predicted_error"].get<double>() <= 0.01 + 1e-12);
}

TEST_CASE("cli: top-level help exits 0 and unknown subcommand exits 2") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("bogus-cmd").exit_code == 2);
}
