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

#include "qroute/qaoa.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "qroute/errors.hpp"
#include "qroute/nelder_mead.hpp"

namespace qroute {
namespace {

constexpr double kPi = std::numbers::pi;

bool is_feasible_init(InitKind k) {
  return k == InitKind::FeasibleUniform || k == InitKind::FeasibleBasis;
}

std::vector<double> cost_table(const QaoaConfig& config,
                               const CvrpInstance& instance,
                               const Layout& layout) {
  if (const auto* bin = std::get_if<BinaryLayout>(&layout)) {
    const auto cost = build_binary_cost(instance, *bin);
    return {cost.values().begin(), cost.values().end()};
  }
  const double A = config.penalty.value_or(penalty_weight(instance));
  const QuboModel model = instance.is_tsp() ? build_tsp_onehot(instance, A)
                                            : build_cvrp_onehot(instance, A);
  return model.diagonal();
}

// Walsh-Hadamard coefficients a_S with c(x) = sum_S a_S (-1)^{popcount(S & x)}.
std::vector<double> walsh_spectrum(std::vector<double> v) {
  const std::size_t n = v.size();
  for (std::size_t h = 1; h < n; h <<= 1)
    for (std::size_t i = 0; i < n; i += h << 1)
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = v[j];
        const double b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
  for (auto& x : v) x /= static_cast<double>(n);
  return v;
}

double uniform_angle(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 * kPi;
}

}  // namespace

QaoaConfig QaoaConfig::binary_hard(int depth) {
  QaoaConfig c;
  c.encoding = EncodingKind::Binary;
  c.mixer = MixerKind::HardSwap;
  c.init.kind = InitKind::FeasibleUniform;
  c.depth = depth;
  return c;
}

QaoaConfig QaoaConfig::onehot_soft(int depth) {
  QaoaConfig c;
  c.encoding = EncodingKind::OneHot;
  c.mixer = MixerKind::SoftX;
  c.init.kind = InitKind::Plus;
  c.depth = depth;
  return c;
}

void QaoaConfig::validate() const {
  if (depth < 1) throw GuardError("depth p must be >= 1");
  if (mixer == MixerKind::HardSwap && encoding != EncodingKind::Binary)
    throw GuardError("hard mixer requires binary encoding");
  if (mixer == MixerKind::HardSwap && !is_feasible_init(init.kind))
    throw GuardError("hard mixer requires a feasible initial state");
  if (mixer == MixerKind::SoftX && encoding == EncodingKind::OneHot && penalty &&
      !(*penalty > 0.0))
    throw GuardError("soft mixer with one-hot encoding requires penalty terms");
  if (optimizer.restarts < 1) throw GuardError("restart count must be >= 1");
  if (optimizer.max_evaluations < 1)
    throw GuardError("max evaluations must be >= 1");
  if (shots < 1) throw GuardError("shots must be >= 1");
}

Layout layout_for(EncodingKind encoding, const CvrpInstance& instance) {
  return make_layout(encoding, Shape::of(instance));
}

Ansatz::Ansatz(const QaoaConfig& config, const CvrpInstance& instance)
    : config_(config), layout_(layout_for(config.encoding, instance)) {
  config_.validate();
  if (qubits(layout_) > config_.max_qubits)
    throw GuardError("layout needs " + std::to_string(qubits(layout_)) +
                     " qubits, above the ceiling of " +
                     std::to_string(config_.max_qubits));
  if (config_.mixer == MixerKind::HardSwap) {
    const auto& bin = std::get<BinaryLayout>(layout_);
    if (bin.registers < 2)
      throw GuardError("hard mixer needs at least two registers (n >= 2)");
    schedule_ = MixerSchedule::odd_even(bin.registers);
  }
  cost_ = cost_table(config_, instance, layout_);
  mask_ = feasibility_mask(layout_);
  if (config_.init.kind == InitKind::FeasibleBasis &&
      (config_.init.index >= mask_.size() || !mask_[config_.init.index]))
    throw GuardError("initial basis state " + std::to_string(config_.init.index) +
                     " is not feasible");
}

StateVector Ansatz::initial_state() const {
  const int q = qubits(layout_);
  switch (config_.init.kind) {
    case InitKind::Plus:
      return init_plus(q, config_.max_qubits);
    case InitKind::FeasibleBasis:
      return init_basis(q, config_.init.index, config_.max_qubits);
    case InitKind::FeasibleUniform:
      break;
  }
  StateVector sv(q, config_.max_qubits);
  std::size_t count = 0;
  for (char m : mask_) count += m != 0;
  const double a = 1.0 / std::sqrt(static_cast<double>(count));
  for (std::size_t x = 0; x < mask_.size(); ++x)
    if (mask_[x]) sv[x] = a;
  return sv;
}

StateVector Ansatz::run(std::span<const double> params) const {
  const auto p = static_cast<std::size_t>(config_.depth);
  if (params.size() != 2 * p)
    throw std::invalid_argument("ansatz needs 2p = " + std::to_string(2 * p) +
                                " angles");
  StateVector sv = initial_state();
  for (std::size_t k = 0; k < p; ++k) {
    apply_phase(sv, cost_, params[k]);
    if (config_.mixer == MixerKind::HardSwap)
      apply_hard_mixer(sv, std::get<BinaryLayout>(layout_), params[p + k],
                       schedule_);
    else
      apply_x_mixer(sv, params[p + k]);
  }
  return sv;
}

StateVector run_ansatz(const QaoaConfig& config, const CvrpInstance& instance,
                       std::span<const double> params) {
  return Ansatz(config, instance).run(params);
}

double circuit_performance(const StateVector& state,
                           const RoutingOptimum& oracle, const Layout& layout) {
  if (state.qubits() != qubits(layout))
    throw std::invalid_argument("layout width does not match state");
  std::set<std::vector<Route>> optimal;
  for (const auto& s : oracle.argmin) optimal.insert(canonical(s).routes);
  double mass = 0.0;
  for (std::uint64_t x = 0; x < state.size(); ++x) {
    const double p = state.probability(x);
    if (p == 0.0 || !is_feasible(layout, x)) continue;
    auto decoded = decode(layout, BitString{state.qubits(), x});
    if (optimal.contains(canonical(std::move(*decoded.solution)).routes))
      mass += p;
  }
  return mass;
}

GateCount gate_count(const QaoaConfig& config, const CvrpInstance& instance) {
  config.validate();
  const Layout layout = layout_for(config.encoding, instance);
  const int q = qubits(layout);
  GateCount layer;

  if (config.encoding == EncodingKind::OneHot) {
    const double A = config.penalty.value_or(penalty_weight(instance));
    const QuboModel model = instance.is_tsp() ? build_tsp_onehot(instance, A)
                                              : build_cvrp_onehot(instance, A);
    layer.two_qubit += static_cast<long long>(model.quadratic().size());
    layer.one_qubit += static_cast<long long>(model.linear().size());
  } else if (q <= config.gates.exact_cost_qubits && q <= kMaxQubits) {
    const auto& bin = std::get<BinaryLayout>(layout);
    const auto cost = build_binary_cost(instance, bin);
    const auto spectrum =
        walsh_spectrum({cost.values().begin(), cost.values().end()});
    double scale = 1.0;
    for (double c : cost.values()) scale = std::max(scale, std::abs(c));
    for (std::size_t s = 1; s < spectrum.size(); ++s) {
      if (std::abs(spectrum[s]) <= 1e-9 * scale) continue;
      const int weight = std::popcount(s);
      if (weight >= 2)
        layer.two_qubit += weight - 1;
      else
        layer.one_qubit += 1;
    }
  } else {
    const long long n = instance.n;
    layer.two_qubit += n * n * n;
    layer.one_qubit += q;
  }

  if (config.mixer == MixerKind::SoftX) {
    layer.one_qubit += q;
  } else {
    const auto& bin = std::get<BinaryLayout>(layout);
    const auto pairs = MixerSchedule::odd_even(bin.registers).pairs();
    const double per_pair =
        config.gates.swap_slope * bin.width + config.gates.swap_intercept;
    layer.two_qubit +=
        static_cast<long long>(std::llround(per_pair)) * static_cast<long long>(pairs.size());
  }
  return {layer.two_qubit * config.depth, layer.one_qubit * config.depth};
}

double modeled_success(double p_ideal, long long two_qubit_gates, double epsilon,
                       double outcome_space) {
  if (p_ideal < 0.0 || p_ideal > 1.0)
    throw std::invalid_argument("p_ideal must be in [0,1]");
  if (epsilon < 0.0 || epsilon >= 1.0)
    throw std::invalid_argument("epsilon must be in [0,1)");
  if (!(outcome_space >= 1.0))
    throw std::invalid_argument("outcome space must be >= 1");
  const double survive = std::pow(1.0 - epsilon, static_cast<double>(two_qubit_gates));
  return p_ideal * survive + (1.0 - survive) / outcome_space;
}

double outcome_space(const QaoaConfig& config, const QaoaResult& result) {
  if (config.mixer == MixerKind::HardSwap)
    return static_cast<double>(result.feasible_states);
  return std::ldexp(1.0, result.qubits);
}

QaoaResult optimize(const QaoaConfig& config, const CvrpInstance& instance) {
  const Ansatz ansatz(config, instance);
  const auto p = static_cast<std::size_t>(config.depth);
  const bool hard = config.mixer == MixerKind::HardSwap;
  const auto& opt = config.optimizer;

  QaoaResult res;
  res.qubits = qubits(ansatz.layout());
  for (char m : ansatz.feasible_mask()) res.feasible_states += m != 0;

  auto objective = [&](std::span<const double> params) {
    ++res.evaluations;
    const StateVector sv = ansatz.run(params);
    if (hard) res.max_leakage = std::max(res.max_leakage, leakage(sv, ansatz.feasible_mask()));
    return expectation(sv, ansatz.cost());
  };

  // Zero angles leave the initial state untouched; keep it as the fallback.
  std::vector<double> best_x(2 * p, 0.0);
  double best_f = objective(best_x);
  double running = best_f;

  std::mt19937_64 rng(opt.seed);
  SimplexOptions simplex;
  simplex.max_evaluations = opt.max_evaluations;
  simplex.tolerance = opt.tolerance;

  std::vector<double> grid_start;
  if (p == 1 && opt.grid > 0) {
    double grid_best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < opt.grid; ++i)
      for (int j = 0; j < opt.grid; ++j) {
        const std::vector<double> x = {i * kPi / opt.grid, j * kPi / opt.grid};
        const double f = objective(x);
        if (f < grid_best) {
          grid_best = f;
          grid_start = x;
        }
      }
    running = std::min(running, grid_best);
    simplex.initial_step = kPi / opt.grid;
  }
  res.trace.push_back(running);

  std::optional<double> restart_best;
  std::vector<double> restart_x;
  for (int r = 0; r < opt.restarts; ++r) {
    std::vector<double> start(2 * p);
    for (auto& a : start) a = uniform_angle(rng);
    if (r == 0 && !grid_start.empty()) start = grid_start;
    const auto run = nelder_mead(objective, start, simplex);
    for (double v : run.trace) res.trace.push_back(std::min(running, v));
    running = std::min(running, run.value);
    // Strict improvement only: ties go to the lowest restart index.
    if (!restart_best || run.value < *restart_best) {
      restart_best = run.value;
      restart_x = run.x;
    }
  }
  if (restart_best && *restart_best <= best_f) {
    best_f = *restart_best;
    best_x = restart_x;
  }

  res.objective = best_f;
  res.gammas.assign(best_x.begin(), best_x.begin() + static_cast<std::ptrdiff_t>(p));
  res.thetas.assign(best_x.begin() + static_cast<std::ptrdiff_t>(p), best_x.end());
  res.final_state = ansatz.run(best_x);
  res.final_leakage = leakage(res.final_state, ansatz.feasible_mask());

  try {
    const auto oracle = brute_force(instance);
    res.optimal_value = oracle.value;
    res.p_opt = circuit_performance(res.final_state, oracle, ansatz.layout());
  } catch (const GuardError&) {
    // Oracle out of reach: P_opt is omitted, the candidate is still reported.
  }

  res.samples = sample(res.final_state, config.shots, opt.seed);
  const Layout& layout = ansatz.layout();
  std::optional<std::uint64_t> pick;
  double pick_cost = 0.0;
  for (const auto& [x, count] : res.samples) {
    if (!ansatz.feasible_mask()[x]) continue;
    const double c = ansatz.cost()[x];
    if (!pick || c < pick_cost) {
      pick = x;
      pick_cost = c;
    }
  }
  if (!pick) {
    // No feasible sample: fall back to the most probable feasible state.
    double best_p = -1.0;
    for (std::uint64_t x = 0; x < res.final_state.size(); ++x)
      if (ansatz.feasible_mask()[x] && res.final_state.probability(x) > best_p) {
        best_p = res.final_state.probability(x);
        pick = x;
      }
  }
  res.best_bits = BitString{res.qubits, *pick};
  res.best = *decode(layout, res.best_bits).solution;
  res.best.cost = solution_cost(instance, res.best);
  res.gates = gate_count(config, instance);
  return res;
}

ClusterFirstResult solve_cvrp_cluster_first(const CvrpInstance& instance,
                                            const QaoaConfig& config) {
  config.validate();
  ClusterFirstResult out;
  const auto clusters = cluster_nodes(instance);
  out.solution.routes.resize(clusters.size());
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    ClusterReport rep;
    rep.nodes = clusters[c];
    const auto k = rep.nodes.size();
    if (k == 1) {
      rep.route = rep.nodes;
    } else if (k >= 2) {
      const CvrpInstance sub = sub_instance(instance, rep.nodes);
      const QaoaResult r = optimize(config, sub);
      for (int local : r.best.routes.front()) rep.route.push_back(rep.nodes[local - 1]);
      rep.p_opt = r.p_opt;
      rep.evaluations = r.evaluations;
    }
    rep.cost = route_cost(instance, rep.route);
    if (k <= static_cast<std::size_t>(kMaxCvrpOracleNodes)) {
      rep.oracle_value =
          k == 0 ? 0.0 : brute_force_tsp(sub_instance(instance, rep.nodes)).value;
      rep.optimal = same_cost(rep.cost, *rep.oracle_value);
    }
    out.solution.routes[c] = rep.route;
    out.clusters.push_back(std::move(rep));
  }
  out.solution.cost = solution_cost(instance, out.solution);
  return out;
}

}  // namespace qroute
