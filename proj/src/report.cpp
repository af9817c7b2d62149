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

#include "qroute/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace qroute {

using nlohmann::json;

double round_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

void round_numbers(json& doc) {
  if (doc.is_number_float()) {
    doc = round_sig12(doc.get<double>());
  } else if (doc.is_array() || doc.is_object()) {
    for (auto& child : doc) round_numbers(child);
  }
}

std::string render_report(json doc) {
  round_numbers(doc);
  return doc.dump(2) + "\n";
}

std::string encoding_name(EncodingKind kind) {
  return kind == EncodingKind::Binary ? "binary" : "onehot";
}

std::string mixer_name(MixerKind kind) {
  return kind == MixerKind::HardSwap ? "hard" : "soft";
}

std::string init_name(InitKind kind) {
  switch (kind) {
    case InitKind::Plus: return "plus";
    case InitKind::FeasibleUniform: return "feasible-uniform";
    case InitKind::FeasibleBasis: return "feasible-basis";
  }
  return "unknown";
}

json routes_json(const Solution& solution) {
  json routes = json::array();
  for (const auto& r : solution.routes) routes.push_back(r);
  return routes;
}

json config_json(const QaoaConfig& c) {
  json j = {
      {"encoding", encoding_name(c.encoding)},
      {"mixer", mixer_name(c.mixer)},
      {"p", c.depth},
      {"init", init_name(c.init.kind)},
      {"restarts", c.optimizer.restarts},
      {"max_evaluations", c.optimizer.max_evaluations},
      {"tolerance", c.optimizer.tolerance},
      {"seed", c.optimizer.seed},
      {"shots", c.shots},
  };
  if (c.init.kind == InitKind::FeasibleBasis) j["init_index"] = c.init.index;
  if (c.penalty) j["penalty"] = *c.penalty;
  return j;
}

json result_json(const QaoaResult& r) {
  json j;
  j["qubits"] = r.qubits;
  j["feasible_states"] = r.feasible_states;
  j["parameters"] = {{"gamma", r.gammas}, {"theta", r.thetas}};
  j["objective"] = r.objective;
  j["evaluations"] = r.evaluations;
  j["p_opt"] = r.p_opt ? json(*r.p_opt) : json(nullptr);
  j["optimal_value"] = r.optimal_value ? json(*r.optimal_value) : json(nullptr);
  j["best_solution"] = {{"routes", routes_json(r.best)},
                        {"cost", r.best.cost},
                        {"bitstring", r.best_bits.to_string()}};
  j["gate_counts"] = {{"two_qubit", r.gates.two_qubit},
                      {"one_qubit", r.gates.one_qubit}};
  j["leakage"] = {{"final", r.final_leakage}, {"max", r.max_leakage}};

  std::vector<std::pair<double, std::uint64_t>> top;
  for (std::uint64_t x = 0; x < r.final_state.size(); ++x)
    if (r.final_state.probability(x) > 1e-12)
      top.emplace_back(-r.final_state.probability(x), x);
  std::ranges::sort(top);
  json states = json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(top.size(), 8); ++i)
    states.push_back({{"index", top[i].second},
                      {"bitstring", BitString{r.qubits, top[i].second}.to_string()},
                      {"probability", -top[i].first}});
  j["top_states"] = std::move(states);
  j["objective_trace"] = r.trace;
  return j;
}

json oracle_json(const RoutingOptimum& oracle) {
  json optima = json::array();
  for (const auto& s : oracle.argmin) optima.push_back(routes_json(s));
  return {{"value", oracle.value},
          {"count", oracle.argmin.size()},
          {"optima", std::move(optima)}};
}

json cluster_json(const ClusterFirstResult& r) {
  json clusters = json::array();
  for (const auto& c : r.clusters) {
    json cj = {{"nodes", c.nodes},
               {"route", c.route},
               {"cost", c.cost},
               {"optimal", c.optimal},
               {"evaluations", c.evaluations}};
    cj["oracle_value"] = c.oracle_value ? json(*c.oracle_value) : json(nullptr);
    cj["p_opt"] = c.p_opt ? json(*c.p_opt) : json(nullptr);
    clusters.push_back(std::move(cj));
  }
  return {{"clusters", std::move(clusters)},
          {"solution", {{"routes", routes_json(r.solution)},
                        {"cost", r.solution.cost}}}};
}

}  // namespace qroute
