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

// Acceptance run: one PASS/FAIL line per criterion, each under its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qroute/cli.hpp"
#include "qroute/encoding.hpp"
#include "qroute/engine.hpp"
#include "qroute/oracle.hpp"
#include "qroute/qaoa.hpp"
#include "qroute/qubo.hpp"

using namespace qroute;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

std::string data(const std::string& name) {
  return std::string(QROUTE_DATA_DIR) + "/" + name;
}

std::string cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  if (qroute::cli::run(args, out, err) != 0)
    throw std::runtime_error("command failed: " + err.str());
  return out.str();
}

CvrpInstance tsp2() { return make_tsp("tsp2", {{0, 1, 4}, {2, 0, 1}, {1, 3, 0}}); }

CvrpInstance tsp3() {
  return make_tsp("tsp3", {{0, 5, 9, 4}, {5, 0, 3, 8}, {9, 3, 0, 2}, {4, 8, 2, 0}});
}

CvrpInstance integer_tsp(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  Matrix m(n + 1, std::vector<double>(n + 1, 0.0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) m[i][j] = 1.0 + static_cast<double>(rng() % 9);
  return make_tsp("seeded", std::move(m));
}

std::set<Route> optimal_routes(const RoutingOptimum& r) {
  std::set<Route> out;
  for (const auto& s : r.argmin) out.insert(s.routes.front());
  return out;
}

Outcome resource_counts() {
  Outcome o;
  const std::vector<int> hardware = {127, 433, 1121};
  const std::string csv = cli::scaling_csv(7, 20, 1, 200, SlotWidth::Compact, hardware);
  expect(o, csv.find("\n100,14000,980\n") != std::string::npos, "row 100,14000,980 missing");
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  std::vector<std::array<long, 3>> rows;
  while (std::getline(is, line) && !line.starts_with("#")) {
    std::array<long, 3> r{};
    std::sscanf(line.c_str(), "%ld,%ld,%ld", &r[0], &r[1], &r[2]);
    rows.push_back(r);
  }
  expect(o, rows.size() == 200, "expected 200 data rows");
  for (const auto& r : rows) {
    const long n = r[0];
    // Flat on (2^(k-1), 2^k]: width ceil(log2 n), floor of one bit.
    const long width = std::max(1, ceil_log2(static_cast<std::uint64_t>(n)));
    expect(o, r[2] == 140 * width, "binary column not piecewise constant at n=" +
                                       std::to_string(n));
    expect(o, r[1] == 140 * n, "one-hot column wrong at n=" + std::to_string(n));
  }
  const auto& at100 = rows[99];
  expect(o, at100[2] <= 1121 && 1121 < at100[1], "roadmap crossing fails at n=100");
  o.detail = o.ok ? "n=100 -> 14000 one-hot, 980 binary" : o.detail;
  return o;
}

Outcome two_node_gates() {
  Outcome o;
  const auto g = gate_count(QaoaConfig::binary_hard(1), tsp2());
  expect(o, g.two_qubit == 4, "two-qubit count " + std::to_string(g.two_qubit));
  const auto demo = json::parse(cli({"demo-tsp2", "--no-timestamp"}));
  expect(o, demo["two_qubit_gates"] == 4, "demo-tsp2 does not report 4");
  if (o.ok) o.detail = "two-qubit operations = 4";
  return o;
}

Outcome tsp2_ideal() {
  Outcome o;
  const auto r = optimize(QaoaConfig::binary_hard(1), tsp2());
  expect(o, r.p_opt && *r.p_opt >= 0.99, "P_opt below 0.99");
  if (o.ok) o.detail = "P_opt = " + std::to_string(*r.p_opt);
  return o;
}

Outcome pipeline_ordering() {
  Outcome o;
  const auto doc = json::parse(cli({"compare", data("tsp2.json"), "--epsilon", "0.01",
                                    "--no-timestamp"}));
  const double bin = doc["binary_hard"]["modeled_success"];
  const double std_ = doc["onehot_penalty"]["modeled_success"];
  expect(o, bin > std_, "binary/hard does not beat one-hot/penalty");
  expect(o, doc["error_reduction_ratio"].is_number() &&
                doc["error_reduction_ratio"].get<double>() > 1.0,
         "error-reduction ratio not above 1");
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "modeled success %.4f vs %.4f, ratio %.2f", bin, std_,
                  doc["error_reduction_ratio"].get<double>());
    o.detail = buf;
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 50 && o.ok; ++seed) {
    const int n_onehot = 1 + static_cast<int>(seed % 3);
    const auto a = integer_tsp(seed, n_onehot);
    const auto truth_a = brute_force_tsp(a);
    const auto qmin = qubo_min(build_tsp_onehot(a, penalty_weight(a)));
    std::set<Route> decoded;
    const Layout onehot = OneHotLayout(Shape::tsp(n_onehot));
    for (auto x : qmin.argmin) {
      const auto d = decode(onehot, {qubits(onehot), x});
      expect(o, d.feasible(), "one-hot argmin infeasible, seed " + std::to_string(seed));
      if (d.feasible()) decoded.insert(d.solution->routes.front());
    }
    expect(o, qmin.value == truth_a.value, "one-hot value mismatch, seed " + std::to_string(seed));
    expect(o, decoded == optimal_routes(truth_a),
           "one-hot argmin mismatch, seed " + std::to_string(seed));

    const int n_binary = 1 + static_cast<int>(seed % 4);
    const auto b = integer_tsp(seed + 1000, n_binary);
    const auto truth_b = brute_force_tsp(b);
    const BinaryLayout layout(Shape::tsp(n_binary));
    const auto diag = build_binary_cost(b, layout);
    double best = 1e300;
    for (double v : diag.values()) best = std::min(best, v);
    std::set<Route> arg;
    for (std::uint64_t x = 0; x < diag.values().size(); ++x)
      if (diag.value(x) == best) {
        const auto d = decode(layout, {layout.qubits(), x});
        expect(o, d.feasible(), "binary argmin infeasible, seed " + std::to_string(seed));
        if (d.feasible()) arg.insert(d.solution->routes.front());
      }
    expect(o, best == truth_b.value, "binary value mismatch, seed " + std::to_string(seed));
    expect(o, arg == optimal_routes(truth_b),
           "binary argmin mismatch, seed " + std::to_string(seed));
  }
  if (o.ok) o.detail = "50 instances, values and argmin sets identical";
  return o;
}

Outcome subspace_preservation() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst_leak = 0.0;
  double worst_norm = 0.0;
  for (int n = 2; n <= 4; ++n) {
    const BinaryLayout layout(Shape::tsp(n));
    const auto cost = build_binary_cost(integer_tsp(n, n), layout);
    const auto schedule = MixerSchedule::odd_even(n);
    const auto feasible = enumerate_feasible(layout);
    for (int trial = 0; trial < 25; ++trial) {
      StateVector sv = trial == 0 ? init_feasible_uniform(layout)
                                  : init_basis(layout.qubits(), feasible[rng() % feasible.size()]);
      for (int step = 0; step < 20; ++step) {
        if (rng() % 2)
          apply_hard_mixer(sv, layout, angle(rng), schedule);
        else
          apply_phase(sv, cost, angle(rng));
        worst_leak = std::max(worst_leak, leakage(sv, Layout{layout}));
      }
      worst_norm = std::max(worst_norm, std::abs(sv.norm_squared() - 1.0));
    }
  }
  expect(o, worst_leak <= 1e-12, "leakage " + std::to_string(worst_leak));
  expect(o, worst_norm <= 1e-10, "norm drift " + std::to_string(worst_norm));
  if (o.ok) {
    char buf[120];
    std::snprintf(buf, sizeof buf, "max leakage %.1e, max norm drift %.1e", worst_leak,
                  worst_norm);
    o.detail = buf;
  }
  return o;
}

Outcome feasible_fraction_law() {
  Outcome o;
  std::uint64_t factorial = 1;
  for (int n = 2; n <= 12; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    const int bits = n * ceil_log2(static_cast<std::uint64_t>(n));
    const auto f = feasible_fraction(EncodingKind::Binary, Shape::tsp(n));
    const double exact = std::ldexp(static_cast<double>(factorial), -bits);
    expect(o, f.value == exact, "fraction wrong at n=" + std::to_string(n));
    expect(o, f.numerator && f.denominator &&
                  static_cast<long double>(*f.numerator) / *f.denominator ==
                      std::ldexp(static_cast<long double>(factorial), -bits),
           "exact rational wrong at n=" + std::to_string(n));
    const double bound = std::sqrt(2 * std::numbers::pi * n) * std::exp(-n) *
                         std::exp(1.0 / (12.0 * n));
    expect(o, f.value <= bound, "Stirling bound violated at n=" + std::to_string(n));
  }
  if (o.ok) {
    // e^{-n sqrt n} badly underestimates the exact fraction; shown for reference.
    const double at12 = feasible_fraction(EncodingKind::Binary, Shape::tsp(12)).value;
    char buf[160];
    std::snprintf(buf, sizeof buf, "bound holds n=2..12; n=12 exact %.3e vs e^-n*sqrt(n) %.3e",
                  at12, std::exp(-12.0 * std::sqrt(12.0)));
    o.detail = buf;
  }
  return o;
}

Outcome tsp3_efficacy() {
  Outcome o;
  const auto inst = tsp3();
  double worst = 1.0;
  for (std::uint64_t seed = 0; seed <= 4; ++seed) {
    auto cfg = QaoaConfig::binary_hard(2);
    cfg.optimizer.seed = seed;
    const auto r = optimize(cfg, inst);
    expect(o, r.best.cost == 14.0, "seed " + std::to_string(seed) + " best cost " +
                                       std::to_string(r.best.cost));
    expect(o, r.p_opt && *r.p_opt > 1.0 / 6.0, "seed " + std::to_string(seed) + " P_opt too low");
    if (r.p_opt) worst = std::min(worst, *r.p_opt);
  }
  if (o.ok) o.detail = "seeds 0..4: cost 14, min P_opt = " + std::to_string(worst);
  return o;
}

Outcome cluster_first() {
  Outcome o;
  double worst_gap = 0.0;
  int instances = 0;
  auto cfg = QaoaConfig::binary_hard(1);
  cfg.optimizer.restarts = 2;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const int V = 2 + static_cast<int>(seed % 2);
    const int C = (n + V - 1) / V + static_cast<int>(seed % 2);
    const auto inst = generate_instance(seed, n, V, C, 10.0);
    const auto r = solve_cvrp_cluster_first(inst, cfg);
    const auto tag = " (seed " + std::to_string(seed) + ")";
    try {
      expect(o, std::abs(solution_cost(inst, r.solution) - r.solution.cost) < 1e-9,
             "cost mismatch" + tag);
    } catch (const std::exception& e) {
      expect(o, false, std::string("infeasible: ") + e.what() + tag);
    }
    for (const auto& c : r.clusters) {
      if (c.nodes.empty()) continue;
      const auto sub = sub_instance(inst, c.nodes);
      const double best = brute_force_tsp(sub).value;
      expect(o, same_cost(c.cost, best), "cluster route not optimal" + tag);
    }
    const double global = brute_force_cvrp(inst).value;
    expect(o, r.solution.cost >= global - 1e-9, "beats the global optimum" + tag);
    worst_gap = std::max(worst_gap, r.solution.cost - global);
    ++instances;
  }
  if (o.ok) {
    char buf[120];
    std::snprintf(buf, sizeof buf, "%d instances feasible and cluster-optimal; max gap %.4f",
                  instances, worst_gap);
    o.detail = buf;
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"solve", data("tsp2.json"), "--seed", "0"},
      {"solve", data("tsp3.json"), "--p", "2", "--seed", "3"},
      {"solve", data("cvrp4.json"), "--seed", "1"},
      {"oracle", data("tsp3.json")},
      {"scaling", "--paper-mode"},
      {"demo-tsp2", "--epsilon", "0.01"},
      {"compare", data("tsp2.json")},
      {"generate", "--seed", "12", "--n", "6", "--vehicles", "2", "--capacity", "3"},
  };
  for (auto args : commands) {
    args.push_back("--no-timestamp");
    expect(o, cli(args) == cli(args), "report differs: " + args.front());
  }
  if (o.ok) o.detail = std::to_string(commands.size()) + " commands byte-identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "resource-count reproduction", 1, resource_counts},
      {2, "two-node circuit gate count", 1, two_node_gates},
      {3, "TSP2 ideal performance", 5, tsp2_ideal},
      {4, "binary/hard beats one-hot/penalty", 30, pipeline_ordering},
      {5, "oracle equivalence", 60, oracle_equivalence},
      {6, "subspace preservation", 60, subspace_preservation},
      {7, "feasible-fraction law", 1, feasible_fraction_law},
      {8, "QAOA efficacy on TSP3", 120, tsp3_efficacy},
      {9, "cluster-first pipeline", 120, cluster_first},
      {10, "determinism", 10, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      out.ok = false;
      out.detail += " (over time budget)";
    }
    failures += out.ok ? 0 : 1;
    std::printf("[%s] %2d %-36s %7.3f s / %5.0f s  %s\n", out.ok ? "PASS" : "FAIL", c.id,
                c.name, secs, c.budget_s, out.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
