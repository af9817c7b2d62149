// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qroute/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "qroute/errors.hpp"
#include "qroute/qaoa.hpp"
#include "qroute/report.hpp"

namespace qroute::cli {
namespace {

using nlohmann::json;

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  bool no_timestamp = false;
};

struct SolveFlags {
  std::string instance;
  std::string encoding = "binary";
  std::string mixer = "auto";
  std::string init = "auto";
  std::uint64_t basis_index = 0;
  int depth = 1;
  int restarts = 4;
  int max_evals = 600;
  std::uint64_t shots = 1024;
  double penalty = 0.0;
  bool has_penalty = false;
  std::string mode = "auto";
  std::string dump_state;
  std::string export_qubo;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const Globals& g, const std::string& text, std::ostream& out) {
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error("cannot write " + g.out);
  f << text;
}

void emit_report(const Globals& g, json doc, std::ostream& out) {
  if (!g.no_timestamp) doc["timestamp"] = utc_timestamp();
  emit(g, render_report(std::move(doc)), out);
}

QaoaConfig make_config(const SolveFlags& f, std::uint64_t seed) {
  QaoaConfig c;
  if (f.encoding == "binary") {
    c.encoding = EncodingKind::Binary;
  } else if (f.encoding == "onehot") {
    c.encoding = EncodingKind::OneHot;
  } else {
    throw std::invalid_argument("unknown encoding '" + f.encoding + "'");
  }
  const std::string mixer =
      f.mixer != "auto" ? f.mixer : (c.encoding == EncodingKind::Binary ? "hard" : "soft");
  if (mixer == "hard") {
    c.mixer = MixerKind::HardSwap;
  } else if (mixer == "soft") {
    c.mixer = MixerKind::SoftX;
  } else {
    throw std::invalid_argument("unknown mixer '" + f.mixer + "'");
  }
  const std::string init =
      f.init != "auto" ? f.init : (c.mixer == MixerKind::HardSwap ? "uniform" : "plus");
  if (init == "plus") {
    c.init.kind = InitKind::Plus;
  } else if (init == "uniform") {
    c.init.kind = InitKind::FeasibleUniform;
  } else if (init == "basis") {
    c.init = {InitKind::FeasibleBasis, f.basis_index};
  } else {
    throw std::invalid_argument("unknown initial state '" + f.init + "'");
  }
  c.depth = f.depth;
  c.optimizer.restarts = f.restarts;
  c.optimizer.max_evaluations = f.max_evals;
  c.optimizer.seed = seed;
  c.shots = f.shots;
  if (f.has_penalty) c.penalty = f.penalty;
  c.validate();
  return c;
}

json instance_header(const std::string& command, const CvrpInstance& inst) {
  return {{"command", command},
          {"instance", inst.name},
          {"n", inst.n},
          {"vehicles", inst.vehicles},
          {"capacity", inst.capacity}};
}

void add_solve_options(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--encoding", f.encoding, "binary | onehot");
  cmd->add_option("--mixer", f.mixer, "hard | soft (default: hard for binary)");
  cmd->add_option("--init", f.init, "plus | uniform | basis");
  cmd->add_option("--basis-index", f.basis_index, "index for --init basis");
  cmd->add_option("--p", f.depth, "ansatz depth");
  cmd->add_option("--restarts", f.restarts, "optimizer restarts");
  cmd->add_option("--max-evals", f.max_evals, "evaluations per restart");
  cmd->add_option("--shots", f.shots, "candidate samples");
  cmd->add_option("--penalty", f.penalty, "one-hot penalty weight override")
      ->each([&f](const std::string&) { f.has_penalty = true; });
}

int cmd_solve(const Globals& g, const SolveFlags& f, std::ostream& out) {
  const CvrpInstance inst = load_instance_file(f.instance);
  const QaoaConfig config = make_config(f, g.seed);
  const bool cluster =
      f.mode == "cluster" || (f.mode == "auto" && !inst.is_tsp());
  if (f.mode != "auto" && f.mode != "cluster" && f.mode != "direct")
    throw std::invalid_argument("unknown mode '" + f.mode + "'");

  json doc = instance_header("solve", inst);
  doc["config"] = config_json(config);
  if (cluster) {
    doc["mode"] = "cluster-first";
    const auto r = solve_cvrp_cluster_first(inst, config);
    doc.update(cluster_json(r));
    if (inst.n <= kMaxCvrpOracleNodes) {
      const double global = brute_force_cvrp(inst).value;
      doc["global_optimum"] = global;
      doc["gap"] = r.solution.cost - global;
    }
  } else {
    doc["mode"] = "direct";
    if (!f.export_qubo.empty()) {
      if (config.encoding != EncodingKind::OneHot)
        throw std::invalid_argument("--export-qubo needs --encoding onehot");
      const double A = config.penalty.value_or(penalty_weight(inst));
      const auto model = inst.is_tsp() ? build_tsp_onehot(inst, A)
                                       : build_cvrp_onehot(inst, A);
      std::ofstream(f.export_qubo) << model.to_text();
    }
    const auto r = optimize(config, inst);
    doc.update(result_json(r));
    if (!f.dump_state.empty()) {
      std::ofstream os(f.dump_state);
      dump_state(r.final_state, os);
    }
  }
  emit_report(g, std::move(doc), out);
  return kExitOk;
}

int cmd_oracle(const Globals& g, const std::string& path, std::ostream& out) {
  const CvrpInstance inst = load_instance_file(path);
  json doc = instance_header("oracle", inst);
  doc.update(oracle_json(brute_force(inst)));
  emit_report(g, std::move(doc), out);
  return kExitOk;
}

struct DemoFlags {
  double c01 = 1, c02 = 4, c10 = 2, c12 = 1, c20 = 1, c21 = 3;
  double epsilon = -1.0;
};

int cmd_demo(const Globals& g, const DemoFlags& d, std::ostream& out) {
  const CvrpInstance inst = make_tsp(
      "demo-tsp2", {{0, d.c01, d.c02}, {d.c10, 0, d.c12}, {d.c20, d.c21, 0}});
  QaoaConfig config = QaoaConfig::binary_hard(1);
  config.optimizer.seed = g.seed;
  const auto r = optimize(config, inst);
  const auto oracle = brute_force_tsp(inst);

  json doc = {{"command", "demo-tsp2"}, {"matrix", inst.cost}};
  json orderings = json::array();
  for (const auto& s : oracle.argmin) orderings.push_back(s.routes.front());
  doc["optimal_orderings"] = std::move(orderings);
  doc["optimal_cost"] = oracle.value;
  doc["best_ordering"] = r.best.routes.front();
  doc["best_cost"] = r.best.cost;
  doc["p_opt"] = *r.p_opt;
  doc["two_qubit_gates"] = r.gates.two_qubit;
  doc["parameters"] = {{"gamma", r.gammas}, {"theta", r.thetas}};
  if (d.epsilon >= 0.0) {
    doc["epsilon"] = d.epsilon;
    doc["modeled_success"] = modeled_success(*r.p_opt, r.gates.two_qubit,
                                             d.epsilon, outcome_space(config, r));
  }
  emit_report(g, std::move(doc), out);
  return kExitOk;
}

int cmd_compare(const Globals& g, const std::string& path, double epsilon,
                int depth, std::ostream& out) {
  const CvrpInstance inst = load_instance_file(path);
  json doc = instance_header("compare", inst);
  doc["epsilon"] = epsilon;

  auto pipeline = [&](QaoaConfig config) {
    config.optimizer.seed = g.seed;
    const auto r = optimize(config, inst);
    if (!r.p_opt) throw GuardError("compare needs the brute-force oracle");
    const double D = outcome_space(config, r);
    const double ms = modeled_success(*r.p_opt, r.gates.two_qubit, epsilon, D);
    json j = {{"p_ideal", *r.p_opt},
              {"two_qubit", r.gates.two_qubit},
              {"one_qubit", r.gates.one_qubit},
              {"outcome_space", D},
              {"modeled_success", ms}};
    return std::pair{j, ms};
  };
  const auto [binary, ms_binary] = pipeline(QaoaConfig::binary_hard(depth));
  const auto [standard, ms_standard] = pipeline(QaoaConfig::onehot_soft(depth));
  doc["binary_hard"] = binary;
  doc["onehot_penalty"] = standard;
  // Null when the binary pipeline is error-free to working precision.
  const double denom = 1.0 - ms_binary;
  doc["error_reduction_ratio"] =
      denom > 1e-12 ? json((1.0 - ms_standard) / denom) : json(nullptr);
  emit_report(g, std::move(doc), out);
  return kExitOk;
}

}  // namespace

std::string scaling_csv(int vehicles, int capacity, int n_min, int n_max,
                        SlotWidth mode, std::span<const int> hardware) {
  if (vehicles < 1 || capacity < 1 || n_min < 1 || n_max < n_min)
    throw std::invalid_argument("scaling needs V, C, n_min >= 1 and n_max >= n_min");
  std::ostringstream os;
  os << "n,onehot_qubits,binary_qubits\n";
  for (int n = n_min; n <= n_max; ++n) {
    const Shape s = Shape::cvrp(n, capacity, vehicles);
    os << n << ',' << qubit_count(EncodingKind::OneHot, s) << ','
       << qubit_count(EncodingKind::Binary, s, mode) << '\n';
  }
  os << "# hardware_qubits,onehot_max_n,binary_max_n\n";
  for (int hw : hardware) {
    int onehot_max = 0;
    int binary_max = 0;
    for (int n = n_min; n <= n_max; ++n) {
      const Shape s = Shape::cvrp(n, capacity, vehicles);
      if (qubit_count(EncodingKind::OneHot, s) <= hw) onehot_max = n;
      if (qubit_count(EncodingKind::Binary, s, mode) <= hw) binary_max = n;
    }
    os << "# " << hw << ',' << onehot_max << ',' << binary_max << '\n';
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"qroute: QAOA vehicle-routing toolkit", "qroute"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--out", g.out, "write the report to this path");
  app.add_flag("--no-timestamp", g.no_timestamp, "omit the timestamp field");

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "optimize an instance with QAOA");
  solve_cmd->add_option("instance", solve.instance, "instance JSON")->required();
  add_solve_options(solve_cmd, solve);
  solve_cmd->add_option("--mode", solve.mode, "auto | direct | cluster");
  solve_cmd->add_option("--dump-state", solve.dump_state, "final state dump path");
  solve_cmd->add_option("--export-qubo", solve.export_qubo, "one-hot QUBO text path");

  std::string oracle_path;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force optimum");
  oracle_cmd->add_option("instance", oracle_path, "instance JSON")->required();

  int vehicles = 7, capacity = 20, n_min = 1, n_max = 200;
  bool paper_mode = false;
  std::vector<int> hardware = {127, 433, 1121};
  auto* scaling_cmd = app.add_subcommand("scaling", "qubit counts per encoding");
  scaling_cmd->add_option("--vehicles", vehicles);
  scaling_cmd->add_option("--capacity", capacity);
  scaling_cmd->add_option("--n-min", n_min);
  scaling_cmd->add_option("--n-max", n_max);
  scaling_cmd->add_flag("--paper-mode", paper_mode,
                        "slot registers of ceil(log2 n) bits, no empty marker");
  scaling_cmd->add_option("--hardware", hardware, "device sizes in qubits")
      ->delimiter(',');

  DemoFlags demo;
  auto* demo_cmd = app.add_subcommand("demo-tsp2", "depot plus two nodes, binary/hard p=1");
  demo_cmd->add_option("--c01", demo.c01);
  demo_cmd->add_option("--c02", demo.c02);
  demo_cmd->add_option("--c10", demo.c10);
  demo_cmd->add_option("--c12", demo.c12);
  demo_cmd->add_option("--c20", demo.c20);
  demo_cmd->add_option("--c21", demo.c21);
  demo_cmd->add_option("--epsilon", demo.epsilon, "two-qubit error rate");

  std::string compare_path;
  double compare_eps = 0.01;
  int compare_depth = 1;
  auto* compare_cmd =
      app.add_subcommand("compare", "binary/hard against one-hot/penalty");
  compare_cmd->add_option("instance", compare_path, "instance JSON")->required();
  compare_cmd->add_option("--epsilon", compare_eps, "two-qubit error rate");
  compare_cmd->add_option("--p", compare_depth, "ansatz depth");

  int gen_n = 4, gen_v = 1, gen_c = 4;
  double gen_box = 10.0;
  auto* gen_cmd = app.add_subcommand("generate", "random Euclidean instance");
  gen_cmd->add_option("--n", gen_n);
  gen_cmd->add_option("--vehicles", gen_v);
  gen_cmd->add_option("--capacity", gen_c);
  gen_cmd->add_option("--box", gen_box);

  std::vector<std::string> argv_store = {"qroute"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve_cmd) return cmd_solve(g, solve, out);
    if (*oracle_cmd) return cmd_oracle(g, oracle_path, out);
    if (*scaling_cmd) {
      emit(g,
           scaling_csv(vehicles, capacity, n_min, n_max,
                       paper_mode ? SlotWidth::Compact : SlotWidth::EmptyMarker,
                       hardware),
           out);
      return kExitOk;
    }
    if (*demo_cmd) return cmd_demo(g, demo, out);
    if (*compare_cmd) return cmd_compare(g, compare_path, compare_eps, compare_depth, out);
    if (*gen_cmd) {
      emit(g, save_instance(generate_instance(g.seed, gen_n, gen_v, gen_c, gen_box)),
           out);
      return kExitOk;
    }
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace qroute::cli
