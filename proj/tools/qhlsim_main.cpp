// Copyright 2026 qhlsim contributors
// SPDX-License-Identifier: Apache-2.0
//
// qhlsim: experiment runner over the qhl library. Subcommands: synth,
// decompose, verify, bcqse-sweep, alpha-fit, hebbian, phase-estimate,
// resources. JSON/CSV outputs carry the full config; identical config and
// seed reproduce outputs byte for byte. Exit codes: 0 success, 1 contract
// violation, 2 input error, 3 precision unreachable.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qhl/batch_io.hpp"
#include "qhl/bcqse.hpp"
#include "qhl/channel.hpp"
#include "qhl/circuit.hpp"
#include "qhl/cpswap.hpp"
#include "qhl/errors.hpp"
#include "qhl/gates.hpp"
#include "qhl/hebbian.hpp"
#include "qhl/linalg.hpp"
#include "qhl/phase_estimation.hpp"
#include "qhl/rz_synth.hpp"

namespace {

using json = nlohmann::json;
using namespace qhl;

std::uint64_t g_seed = 0;

json counts_json(const GateCountVector& c) {
  return json{{"h", c.h},       {"s", c.s}, {"w", c.w},
              {"cnot", c.cnot}, {"t", c.t}, {"total", c.total()}};
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw input_error("cannot write output file '" + path + "'");
  }
  out << text;
}

void emit_json(const json& j, const std::string& path) {
  emit_text(j.dump(2) + "\n", path);
}

std::vector<long long> parse_ll_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw input_error("malformed integer list entry '" + item + "'");
    }
  }
  if (out.empty()) {
    throw input_error("empty integer list");
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw input_error("malformed real list entry '" + item + "'");
    }
  }
  if (out.empty()) {
    throw input_error("empty real list");
  }
  return out;
}

// "plus" (uniform superposition) or a computational basis index.
StateVector parse_input_spec(const std::string& spec, int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (spec == "plus" || spec == "+") {
    StateVector s;
    s.num_qubits = n_qubits;
    s.amplitudes = ComplexVector::Constant(
        dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    return s;
  }
  long long idx = 0;
  try {
    size_t used = 0;
    idx = std::stoll(spec, &used);
    if (used != spec.size()) throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    throw input_error("input spec must be 'plus' or a basis index, got '" +
                      spec + "'");
  }
  if (idx < 0 || idx >= dim) {
    throw input_error("basis index " + std::to_string(idx) +
                      " outside register of " + std::to_string(n_qubits) +
                      " qubits");
  }
  return basis_state(n_qubits, idx);
}

// Block of the compiled cpswap unitary with the scratch ancilla held in |0>,
// plus the worst amplitude leaking out of that sector.
struct AncillaView {
  ComplexMatrix block;
  double leak = 0.0;
};

AncillaView ancilla_zero_view(const ComplexMatrix& u) {
  const Eigen::Index d = u.rows() / 2;
  AncillaView v{ComplexMatrix(d, d), 0.0};
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      v.block(r, c) = u(2 * r, 2 * c);
      v.leak = std::max(v.leak, std::abs(u(2 * r + 1, 2 * c)));
    }
  }
  return v;
}

// ---- synth ------------------------------------------------------------------

struct SynthArgs {
  double tau = 0.0;
  double eta = 1e-3;
  std::string output;
};

void run_synth(const SynthArgs& a) {
  const SynthesisResult r = shared_synthesizer().synthesize(a.tau, a.eta);
  json tokens = json::array();
  for (GateKind g : r.sequence) tokens.push_back(gate_token(g));
  emit_json(json{{"config",
                  {{"subcommand", "synth"},
                   {"tau", a.tau},
                   {"eta", a.eta},
                   {"seed", g_seed}}},
                 {"sequence", std::move(tokens)},
                 {"achieved_error", r.achieved_error},
                 {"counts", counts_json(r.counts)},
                 {"t_budget", shared_synthesizer().t_budget()}},
            a.output);
}

// ---- decompose --------------------------------------------------------------

struct DecomposeArgs {
  int n = 1;
  double theta = 0.0;
  double eta = 1e-3;
  std::string circuit_out = "cpswap_circuit.txt";
  std::string report_out;
};

void run_decompose(const DecomposeArgs& a) {
  CPSwapSpec spec;
  spec.n_qubits_per_register = a.n;
  spec.theta = a.theta;
  spec.synthesis_eta = a.eta;
  const CPSwapBuild build = build_cpswap_circuit(spec);
  write_circuit_file(build.circuit, a.circuit_out);

  const GateCountVector actual = gate_count(build.circuit);
  const GateCountVector formula =
      cpswap_count_formula(a.n, count_model_g(a.eta), 10);

  json report{{"config",
               {{"subcommand", "decompose"},
                {"n", a.n},
                {"theta", a.theta},
                {"eta", a.eta},
                {"circuit_out", a.circuit_out},
                {"seed", g_seed}}},
              {"formula_counts", counts_json(formula)},
              {"actual_counts", counts_json(actual)},
              {"rotation_errors",
               {build.rot_first.achieved_error,
                build.rot_second.achieved_error}}};

  // Dense verification while the register fits comfortably.
  if (build.circuit.num_qubits <= 8) {
    const ComplexMatrix u = compile_unitary(build.circuit);
    const AncillaView view = ancilla_zero_view(u);
    report["verified_error"] =
        phase_invariant_distance(view.block, exact_cpswap(spec));
    report["ancilla_leak"] = view.leak;
  } else {
    report["verified_error"] = nullptr;
    report["verify_note"] = "register too large for dense verification";
  }
  emit_json(report, a.report_out);
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string circuit_path;
  int n = 0;          // when > 0, compare against exact cpswap
  double theta = 0.0;
  double eta = 1e-3;
  std::string output;
};

void run_verify(const VerifyArgs& a) {
  const Circuit c = read_circuit_file(a.circuit_path);
  if (c.num_qubits > 12) {
    throw input_error("verify: circuit too wide for dense compilation");
  }
  const ComplexMatrix u = compile_unitary(c);
  const double residual = unitarity_residual(u);
  json out{{"config",
            {{"subcommand", "verify"},
             {"circuit", a.circuit_path},
             {"seed", g_seed}}},
           {"num_qubits", c.num_qubits},
           {"gates", c.gates.size()},
           {"counts", counts_json(gate_count(c))},
           {"unitarity_residual", residual}};
  bool ok = residual <= 1e-9;
  if (a.n > 0) {
    CPSwapSpec spec;
    spec.n_qubits_per_register = a.n;
    spec.theta = a.theta;
    spec.synthesis_eta = a.eta;
    if (c.num_qubits != 2 * a.n + 2) {
      throw input_error("verify: circuit has " +
                        std::to_string(c.num_qubits) + " wires, cpswap needs " +
                        std::to_string(2 * a.n + 2));
    }
    const AncillaView view = ancilla_zero_view(u);
    const double dist = phase_invariant_distance(view.block, exact_cpswap(spec));
    const double bound = 2.0 * a.eta + 1e-9;
    out["cpswap_distance"] = dist;
    out["ancilla_leak"] = view.leak;
    out["bound"] = bound;
    out["within_bound"] = dist <= bound && view.leak <= bound;
    ok = ok && dist <= bound && view.leak <= bound;
  }
  emit_json(out, a.output);
  if (!ok) {
    throw contract_error("verify: circuit failed verification");
  }
}

// ---- bcqse-sweep ------------------------------------------------------------

struct SweepArgs {
  std::string batch_path;
  double t = 1.0;
  std::string n_list = "1,2,4,8,16,32";
  std::string mode = "ideal_swap";
  double eta = 1e-3;
  double alpha = 1.0;
  double eps_g = 0.0;
  std::string output;
};

void run_sweep(const SweepArgs& a) {
  const TrainingBatch batch = load_batch_file(a.batch_path);
  const SwapMode mode = swap_mode_from_name(a.mode);
  const std::vector<long long> ns = parse_ll_list(a.n_list);
  const QuantumChannel target = target_channel(batch, a.t);

  ErrorModelParams model;
  model.alpha = a.alpha;
  model.gate_errors = GateErrorVector::uniform(a.eps_g);
  model.eta = mode == SwapMode::compiled_circuit ? a.eta : 0.0;
  model.copies = batch.copies();
  model.n_qubits = batch.n_qubits;
  model.g_eta = mode == SwapMode::compiled_circuit ? count_model_g(a.eta) : 0;

  struct Row {
    long long n;
    double choi;
    double op_proxy;
    double predicted;
  };
  std::vector<std::future<Row>> futures;
  futures.reserve(ns.size());
  for (long long n : ns) {
    futures.push_back(std::async(std::launch::async, [&, n] {
      ProtocolParams p;
      p.t = a.t;
      p.n = n;
      p.mode = mode;
      p.synthesis_eta = a.eta;
      const QuantumChannel run = run_bcqse(batch, p);
      const ComplexMatrix delta = run.choi - target.choi;
      return Row{n, channel_distance(run, target), 0.5 * op_norm(delta),
                 error_model(model, a.t, n)};
    }));
  }

  std::ostringstream csv;
  csv << "# config: subcommand=bcqse-sweep batch=" << a.batch_path
      << " t=" << fmt_double(a.t) << " n-list=" << a.n_list
      << " mode=" << swap_mode_name(mode) << " eta=" << fmt_double(a.eta)
      << " alpha=" << fmt_double(a.alpha) << " eps-g=" << fmt_double(a.eps_g)
      << " seed=" << g_seed << "\n";
  csv << "n,choi_distance,op_distance_proxy,predicted_error_model\n";
  for (auto& f : futures) {
    const Row row = f.get();
    csv << row.n << "," << fmt_double(row.choi) << ","
        << fmt_double(row.op_proxy) << "," << fmt_double(row.predicted)
        << "\n";
  }
  emit_text(csv.str(), a.output);
}

// ---- alpha-fit --------------------------------------------------------------

struct AlphaFitArgs {
  std::string batch_path;
  std::string t_list = "0.25,0.5,1.0";
  long long n = 16;
  std::string mode = "ideal_swap";
  double eta = 1e-3;
  std::string output;
};

void run_alpha_fit(const AlphaFitArgs& a) {
  const TrainingBatch batch = load_batch_file(a.batch_path);
  const AlphaFit fit = fit_alpha(batch, parse_double_list(a.t_list), a.n,
                                 swap_mode_from_name(a.mode), a.eta);
  json points = json::array();
  for (size_t i = 0; i < fit.ts.size(); ++i) {
    points.push_back(json{{"t", fit.ts[i]}, {"error", fit.errors[i]}});
  }
  emit_json(json{{"config",
                  {{"subcommand", "alpha-fit"},
                   {"batch", a.batch_path},
                   {"t_list", a.t_list},
                   {"n", a.n},
                   {"mode", swap_mode_name(swap_mode_from_name(a.mode))},
                   {"eta", a.eta},
                   {"seed", g_seed}}},
                 {"alpha", fit.alpha},
                 {"max_residual", fit.max_residual},
                 {"points", std::move(points)}},
            a.output);
}

// ---- hebbian ----------------------------------------------------------------

struct HebbianArgs {
  std::string patterns_path;
  std::string weights_out = "hebbian_weights.csv";
  std::string batch_out = "hebbian_batch.json";
  double t_data = 1.0;
  std::string output;
};

void run_hebbian(const HebbianArgs& a) {
  const PatternSet set = load_pattern_file(a.patterns_path);
  const HebbianWeights w = build_weight_matrix(set);
  const double residual = quantum_hebbian_identity_check(set);
  const TrainingBatch batch = encode_pattern_batch(set, a.t_data);
  write_batch_file(batch, a.batch_out);

  std::ostringstream csv;
  csv << "# config: subcommand=hebbian patterns=" << a.patterns_path
      << " t-data=" << fmt_double(a.t_data) << " seed=" << g_seed
      << " residual=" << fmt_double(residual) << "\n";
  for (int j = 0; j < w.dim; ++j) {
    csv << (j ? "," : "") << "w_" << j;
  }
  csv << "\n";
  for (int i = 0; i < w.dim; ++i) {
    for (int j = 0; j < w.dim; ++j) {
      csv << (j ? "," : "") << fmt_double(w.w(i, j));
    }
    csv << "\n";
  }
  emit_text(csv.str(), a.weights_out);

  emit_json(json{{"config",
                  {{"subcommand", "hebbian"},
                   {"patterns", a.patterns_path},
                   {"t_data", a.t_data},
                   {"seed", g_seed}}},
                 {"dim", w.dim},
                 {"copies", set.copies()},
                 {"identity_residual", residual},
                 {"weights_csv", a.weights_out},
                 {"batch_file", a.batch_out}},
            a.output);
}

// ---- phase-estimate ---------------------------------------------------------

struct PhaseEstArgs {
  std::string batch_path;
  std::string input = "0";
  int bits = 4;
  int shots = 0;
  long long n = 64;
  std::string mode = "ideal_swap";
  double eta = 1e-3;
  bool ideal_channel = false;
  std::string output;
};

void run_phase_estimate(const PhaseEstArgs& a) {
  const TrainingBatch batch = load_batch_file(a.batch_path);
  const StateVector input = parse_input_spec(a.input, batch.n_qubits);
  ProtocolParams params;
  params.n = a.n;
  params.mode = swap_mode_from_name(a.mode);
  params.synthesis_eta = a.eta;
  PEConfig config;
  config.use_ideal_channel = a.ideal_channel;

  const PhaseEstimateResult r =
      kitaev_phase_estimate(batch, input, a.bits, params, config);
  json per_bit = json::array();
  for (double phase : r.stage_phases) {
    // Probability of reading 1 in the X basis at this power.
    per_bit.push_back(0.5 * (1.0 - std::cos(2.0 * 3.14159265358979323846 *
                                            phase)));
  }
  const PEResourceReport res = pe_resource_report(
      std::pow(2.0, -a.bits), batch.copies(), batch.n_qubits);

  json out{{"config",
            {{"subcommand", "phase-estimate"},
             {"batch", a.batch_path},
             {"input", a.input},
             {"bits", a.bits},
             {"shots", a.shots},
             {"n", a.n},
             {"mode", swap_mode_name(params.mode)},
             {"eta", a.eta},
             {"ideal_channel", a.ideal_channel},
             {"seed", g_seed}}},
           {"estimate", r.estimated_eigenvalue},
           {"precision_bits", r.precision_bits},
           {"input_overlap", r.input_overlap},
           {"resolution_warning", r.resolution_warning},
           {"stage_phases", r.stage_phases},
           {"per_bit_probs", std::move(per_bit)},
           {"resources",
            {{"epsilon", std::pow(2.0, -a.bits)},
             {"unitary_applications", res.unitary_applications},
             {"n_per_application", res.n_per_application},
             {"total_batches", res.total_batches},
             {"qubit_estimate", res.qubit_estimate},
             {"gate_estimate", res.gate_estimate},
             {"learning_qubits_serial", res.learning_qubits_serial},
             {"learning_qubits_parallel", res.learning_qubits_parallel}}}};

  if (a.shots > 0) {
    const std::vector<ShotRecord> recs = sample_phase_estimates(
        batch, input, a.bits, params, a.shots, g_seed, config);
    std::map<std::string, int> histogram;
    std::vector<double> bit_freqs(static_cast<size_t>(a.bits) + 1, 0.0);
    for (const ShotRecord& rec : recs) {
      histogram[fmt_double(rec.estimate)] += 1;
      for (size_t b = 0; b < rec.bits.size(); ++b) {
        bit_freqs[b] += rec.bits[b];
      }
    }
    for (double& f : bit_freqs) f /= static_cast<double>(a.shots);
    out["shots"] = json{{"count", a.shots},
                        {"histogram", histogram},
                        {"per_bit_freqs", bit_freqs}};
  }
  emit_json(out, a.output);
}

// ---- resources --------------------------------------------------------------

struct ResourcesArgs {
  std::string regime = "fixed";
  double t = 1.0;
  long long m = 1;
  int n_qubits = 1;
  double epsilon = 0.1;
  double t_data = 1.0;
  double alpha = 1.0;
  std::string output;
};

void run_resources(const ResourcesArgs& a) {
  ResourceRegime regime;
  if (a.regime == "fixed") {
    regime = ResourceRegime::fixed;
  } else if (a.regime == "ec" || a.regime == "error_corrected") {
    regime = ResourceRegime::error_corrected;
  } else {
    throw input_error("unknown regime '" + a.regime +
                      "' (expected fixed|ec)");
  }
  ResourceConfig config;
  config.alpha = a.alpha;
  const ResourceReport r =
      resource_report(a.n_qubits, a.m, a.t, a.epsilon, regime, a.t_data,
                      config);
  emit_json(
      json{{"config",
            {{"subcommand", "resources"},
             {"regime", a.regime},
             {"t", a.t},
             {"m", a.m},
             {"n_qubits", a.n_qubits},
             {"epsilon", a.epsilon},
             {"t_data", a.t_data},
             {"alpha", a.alpha},
             {"delta_prime", config.delta_prime},
             {"delta_dprime", config.delta_dprime},
             {"batch_constant", config.batch_constant},
             {"seed", g_seed}}},
           {"n", r.n},
           {"eta", r.eta},
           {"g_eta", r.g_eta},
           {"eps_g", r.eps_g},
           {"swap_gates", counts_json(r.swap_gates)},
           {"logical_qubits", r.logical_qubits},
           {"logical_gates", r.logical_gates},
           {"overhead_factor", r.overhead_factor},
           {"physical_qubits", r.physical_qubits},
           {"physical_gates", r.physical_gates},
           {"data_oracle_calls", r.data_oracle_calls},
           {"data_oracle_cost", r.data_oracle_cost},
           {"predicted_error", r.predicted_error},
           {"failure_regime", r.failure_regime}},
      a.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qhlsim: batched controlled state exponentiation experiments"};
  app.require_subcommand(1);
  app.add_option("--seed", g_seed, "RNG seed recorded in every output");

  SynthArgs synth;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Clifford+T synthesis of e^{-i tau Z}");
  synth_cmd->add_option("--tau", synth.tau, "rotation angle")->required();
  synth_cmd->add_option("--eta", synth.eta, "target accuracy")->required();
  synth_cmd->add_option("--output", synth.output, "JSON output path");
  synth_cmd->callback([&] { run_synth(synth); });

  DecomposeArgs dec;
  CLI::App* dec_cmd = app.add_subcommand(
      "decompose", "compile the controlled partial swap circuit");
  dec_cmd->add_option("--n", dec.n, "qubits per register")->required();
  dec_cmd->add_option("--theta", dec.theta, "swap angle")->required();
  dec_cmd->add_option("--eta", dec.eta, "rotation synthesis accuracy");
  dec_cmd->add_option("--circuit-out", dec.circuit_out, "circuit file path");
  dec_cmd->add_option("--report-out", dec.report_out, "JSON report path");
  dec_cmd->callback([&] { run_decompose(dec); });

  VerifyArgs ver;
  CLI::App* ver_cmd =
      app.add_subcommand("verify", "recompile a circuit file and check it");
  ver_cmd->add_option("--circuit", ver.circuit_path, "circuit file")
      ->required();
  ver_cmd->add_option("--n", ver.n, "compare against cpswap of this size");
  ver_cmd->add_option("--theta", ver.theta, "cpswap angle for comparison");
  ver_cmd->add_option("--eta", ver.eta, "synthesis accuracy for the bound");
  ver_cmd->add_option("--output", ver.output, "JSON output path");
  ver_cmd->callback([&] { run_verify(ver); });

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "bcqse-sweep", "protocol error vs batch count, CSV output");
  sweep_cmd->add_option("--batch", sweep.batch_path, "batch JSON file")
      ->required();
  sweep_cmd->add_option("--t", sweep.t, "evolution time")->required();
  sweep_cmd->add_option("--n-list", sweep.n_list, "comma-separated n values");
  sweep_cmd->add_option("--mode", sweep.mode, "ideal|compiled");
  sweep_cmd->add_option("--eta", sweep.eta, "synthesis accuracy");
  sweep_cmd->add_option("--alpha", sweep.alpha, "model prefactor");
  sweep_cmd->add_option("--eps-g", sweep.eps_g, "uniform per-gate error");
  sweep_cmd->add_option("--output", sweep.output, "CSV output path");
  sweep_cmd->callback([&] { run_sweep(sweep); });

  AlphaFitArgs afit;
  CLI::App* afit_cmd = app.add_subcommand(
      "alpha-fit", "fit the quadratic error prefactor from runs");
  afit_cmd->add_option("--batch", afit.batch_path, "batch JSON file")
      ->required();
  afit_cmd->add_option("--t-list", afit.t_list, "comma-separated times");
  afit_cmd->add_option("--n", afit.n, "batch repetitions");
  afit_cmd->add_option("--mode", afit.mode, "ideal|compiled");
  afit_cmd->add_option("--eta", afit.eta, "synthesis accuracy");
  afit_cmd->add_option("--output", afit.output, "JSON output path");
  afit_cmd->callback([&] { run_alpha_fit(afit); });

  HebbianArgs heb;
  CLI::App* heb_cmd = app.add_subcommand(
      "hebbian", "weight matrix + encoded batch from a pattern file");
  heb_cmd->add_option("--patterns", heb.patterns_path, "pattern JSON file")
      ->required();
  heb_cmd->add_option("--weights-out", heb.weights_out, "W CSV path");
  heb_cmd->add_option("--batch-out", heb.batch_out, "encoded batch path");
  heb_cmd->add_option("--t-data", heb.t_data, "declared oracle cost");
  heb_cmd->add_option("--output", heb.output, "JSON summary path");
  heb_cmd->callback([&] { run_hebbian(heb); });

  PhaseEstArgs pe;
  CLI::App* pe_cmd = app.add_subcommand(
      "phase-estimate", "Kitaev eigenvalue estimation on a batch ensemble");
  pe_cmd->add_option("--batch", pe.batch_path, "batch JSON file")->required();
  pe_cmd->add_option("--input", pe.input, "basis index or 'plus'");
  pe_cmd->add_option("--bits", pe.bits, "precision bits")->required();
  pe_cmd->add_option("--shots", pe.shots, "sampled trajectories (0 = exact)");
  pe_cmd->add_option("--n", pe.n, "base batch repetitions");
  pe_cmd->add_option("--mode", pe.mode, "ideal|compiled");
  pe_cmd->add_option("--eta", pe.eta, "synthesis accuracy");
  pe_cmd->add_flag("--ideal-channel", pe.ideal_channel,
                   "substitute the exact target channel");
  pe_cmd->add_option("--output", pe.output, "JSON output path");
  pe_cmd->callback([&] { run_phase_estimate(pe); });

  ResourcesArgs res;
  CLI::App* res_cmd =
      app.add_subcommand("resources", "qubit/gate resource report");
  res_cmd->add_option("--regime", res.regime, "fixed|ec")->required();
  res_cmd->add_option("--t", res.t, "evolution time")->required();
  res_cmd->add_option("--m", res.m, "copies per batch")->required();
  res_cmd->add_option("--n-qubits", res.n_qubits, "register qubits")
      ->required();
  res_cmd->add_option("--epsilon", res.epsilon, "EC error budget");
  res_cmd->add_option("--t-data", res.t_data, "declared oracle cost");
  res_cmd->add_option("--alpha", res.alpha, "assumed batching prefactor");
  res_cmd->add_option("--output", res.output, "JSON output path");
  res_cmd->callback([&] { run_resources(res); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const precision_unreachable_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const contract_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
