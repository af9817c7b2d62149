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

#include "qroute/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qroute {
namespace {

using nlohmann::json;

double round6(double v) { return std::round(v * 1e6) / 1e6; }

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer())
    throw std::invalid_argument(std::string("instance field '") + key +
                                "' must be an integer");
  return doc.at(key).get<int>();
}

}  // namespace

double CvrpInstance::max_cost() const {
  double m = 0.0;
  for (const auto& row : cost)
    for (double c : row) m = std::max(m, c);
  return m;
}

void validate(const CvrpInstance& inst) {
  if (inst.n < 0) throw std::invalid_argument("node count must be >= 0");
  if (inst.vehicles < 1) throw std::invalid_argument("vehicles must be >= 1");
  if (inst.capacity < 1) throw std::invalid_argument("capacity must be >= 1");
  const auto dim = static_cast<std::size_t>(inst.n) + 1;
  if (inst.cost.size() != dim)
    throw std::invalid_argument("dimension mismatch: cost matrix needs n+1 rows");
  for (std::size_t i = 0; i < dim; ++i) {
    if (inst.cost[i].size() != dim)
      throw std::invalid_argument("dimension mismatch: cost matrix row " +
                                  std::to_string(i) + " needs n+1 entries");
    for (std::size_t j = 0; j < dim; ++j) {
      const double c = inst.cost[i][j];
      if (!std::isfinite(c)) throw std::invalid_argument("non-finite cost");
      if (c < 0.0) throw std::invalid_argument("negative cost");
      if (i == j && c != 0.0) throw std::invalid_argument("nonzero diagonal");
    }
  }
  if (static_cast<long long>(inst.vehicles) * inst.capacity < inst.n)
    throw std::invalid_argument(
        "V*C < n: vehicle capacity cannot cover all nodes");
  if (inst.coords && inst.coords->size() != dim)
    throw std::invalid_argument("dimension mismatch: coords needs n+1 points");
}

CvrpInstance make_instance(std::string name, Matrix cost, int vehicles,
                           int capacity) {
  CvrpInstance inst;
  inst.name = std::move(name);
  inst.n = cost.empty() ? -1 : static_cast<int>(cost.size()) - 1;
  inst.cost = std::move(cost);
  inst.vehicles = vehicles;
  inst.capacity = capacity;
  validate(inst);
  return inst;
}

CvrpInstance make_tsp(std::string name, Matrix cost) {
  const int n = cost.empty() ? 0 : static_cast<int>(cost.size()) - 1;
  return make_instance(std::move(name), std::move(cost), 1, std::max(n, 1));
}

double euclidean_cost(const Point& a, const Point& b) {
  return round6(std::hypot(a.x - b.x, a.y - b.y));
}

Matrix cost_from_coords(std::span<const Point> coords) {
  Matrix m(coords.size(), std::vector<double>(coords.size(), 0.0));
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j)
      if (i != j) m[i][j] = euclidean_cost(coords[i], coords[j]);
  return m;
}

CvrpInstance load_instance(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed instance: ") + e.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("malformed instance: expected a JSON object");

  static const std::set<std::string> known = {"name",     "n",      "vehicles",
                                              "capacity", "matrix", "coords"};
  for (const auto& [key, _] : doc.items())
    if (!known.contains(key))
      throw std::invalid_argument("unknown instance field '" + key + "'");

  CvrpInstance inst;
  if (!doc.contains("name") || !doc.at("name").is_string())
    throw std::invalid_argument("instance field 'name' must be a string");
  inst.name = doc.at("name").get<std::string>();
  inst.n = require_int(doc, "n");
  inst.vehicles = require_int(doc, "vehicles");
  inst.capacity = require_int(doc, "capacity");
  if (inst.n < 0) throw std::invalid_argument("node count must be >= 0");

  const bool has_matrix = doc.contains("matrix");
  const bool has_coords = doc.contains("coords");
  if (has_matrix == has_coords)
    throw std::invalid_argument(
        "instance needs exactly one of 'matrix' or 'coords'");

  const auto dim = static_cast<std::size_t>(inst.n) + 1;
  if (has_matrix) {
    const json& m = doc.at("matrix");
    if (!m.is_array() || m.size() != dim)
      throw std::invalid_argument("dimension mismatch: matrix needs n+1 rows");
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != dim)
        throw std::invalid_argument(
            "dimension mismatch: matrix rows need n+1 entries");
      std::vector<double> r;
      r.reserve(dim);
      for (const auto& v : row) {
        if (!v.is_number())
          throw std::invalid_argument("malformed instance: non-numeric cost");
        r.push_back(v.get<double>());
      }
      inst.cost.push_back(std::move(r));
    }
  } else {
    const json& c = doc.at("coords");
    if (!c.is_array() || c.size() != dim)
      throw std::invalid_argument("dimension mismatch: coords needs n+1 points");
    std::vector<Point> pts;
    for (const auto& p : c) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
          !p[1].is_number())
        throw std::invalid_argument("malformed instance: coords are [x,y]");
      pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    inst.cost = cost_from_coords(pts);
    inst.coords = std::move(pts);
  }
  validate(inst);
  return inst;
}

CvrpInstance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

std::string save_instance(const CvrpInstance& inst) {
  json doc = json::object();
  doc["name"] = inst.name;
  doc["n"] = inst.n;
  doc["vehicles"] = inst.vehicles;
  doc["capacity"] = inst.capacity;
  if (inst.coords) {
    json pts = json::array();
    for (const auto& p : *inst.coords) pts.push_back({p.x, p.y});
    doc["coords"] = std::move(pts);
  } else {
    doc["matrix"] = inst.cost;
  }
  return doc.dump(2) + "\n";
}

double route_cost(const CvrpInstance& inst, const Route& route) {
  if (route.empty()) return 0.0;
  std::vector<bool> seen(static_cast<std::size_t>(inst.n) + 1, false);
  for (int u : route) {
    if (u < 1 || u > inst.n)
      throw std::invalid_argument("node index " + std::to_string(u) +
                                  " out of range");
    if (seen[u])
      throw std::invalid_argument("duplicate node " + std::to_string(u) +
                                  " in route");
    seen[u] = true;
  }
  double total = inst.cost[0][route.front()];
  for (std::size_t i = 0; i + 1 < route.size(); ++i)
    total += inst.cost[route[i]][route[i + 1]];
  total += inst.cost[route.back()][0];
  return total;
}

double solution_cost(const CvrpInstance& inst, const Solution& solution) {
  if (solution.routes.size() > static_cast<std::size_t>(inst.vehicles))
    throw std::invalid_argument("more routes than vehicles");
  std::vector<int> count(static_cast<std::size_t>(inst.n) + 1, 0);
  for (const auto& route : solution.routes) {
    if (route.size() > static_cast<std::size_t>(inst.capacity))
      throw std::invalid_argument("route longer than capacity");
    for (int u : route) {
      if (u < 1 || u > inst.n)
        throw std::invalid_argument("node index " + std::to_string(u) +
                                    " out of range");
      if (++count[u] > 1)
        throw std::invalid_argument("duplicated node " + std::to_string(u));
    }
  }
  for (int u = 1; u <= inst.n; ++u)
    if (count[u] == 0)
      throw std::invalid_argument("missing node " + std::to_string(u));

  double total = 0.0;
  for (const auto& route : solution.routes) total += route_cost(inst, route);
  return total;
}

Solution canonical(Solution solution) {
  std::ranges::sort(solution.routes);
  return solution;
}

std::vector<std::vector<int>> cluster_nodes(const CvrpInstance& inst) {
  validate(inst);
  const int seeds = std::min(inst.vehicles, inst.n);
  std::vector<std::vector<int>> clusters(inst.vehicles);
  std::vector<bool> assigned(static_cast<std::size_t>(inst.n) + 1, false);

  // Farthest-first seeding: each seed maximizes its distance to the depot and
  // to every seed chosen before it.
  std::vector<int> centers = {0};
  for (int c = 0; c < seeds; ++c) {
    int best = -1;
    double best_dist = -1.0;
    for (int u = 1; u <= inst.n; ++u) {
      if (assigned[u]) continue;
      double d = std::numeric_limits<double>::infinity();
      for (int s : centers) d = std::min(d, inst.cost[s][u]);
      if (d > best_dist) {
        best_dist = d;
        best = u;
      }
    }
    assigned[best] = true;
    clusters[c].push_back(best);
    centers.push_back(best);
  }

  for (int u = 1; u <= inst.n; ++u) {
    if (assigned[u]) continue;
    int target = -1;
    double target_dist = std::numeric_limits<double>::infinity();
    for (int c = 0; c < seeds; ++c) {
      if (clusters[c].size() >= static_cast<std::size_t>(inst.capacity))
        continue;
      const double d = inst.cost[clusters[c].front()][u];
      if (d < target_dist) {
        target_dist = d;
        target = c;
      }
    }
    // V*C >= n guarantees spare capacity somewhere.
    clusters[target].push_back(u);
    assigned[u] = true;
  }
  for (auto& c : clusters) std::ranges::sort(c);
  return clusters;
}

CvrpInstance generate_instance(std::uint64_t seed, int n, int vehicles,
                               int capacity, double box) {
  if (n < 1) throw std::invalid_argument("generate_instance needs n >= 1");
  if (static_cast<long long>(vehicles) * capacity < n)
    throw std::invalid_argument(
        "V*C < n: vehicle capacity cannot cover all nodes");
  if (!(box > 0.0)) throw std::invalid_argument("box side must be positive");

  std::mt19937_64 rng(seed);
  // 53-bit uniform in [0,1); avoids implementation-defined distributions.
  auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double x = round6(uniform() * box);
    const double y = round6(uniform() * box);
    pts.push_back({x, y});
  }
  CvrpInstance inst;
  inst.name = "gen-s" + std::to_string(seed) + "-n" + std::to_string(n);
  inst.n = n;
  inst.vehicles = vehicles;
  inst.capacity = capacity;
  inst.cost = cost_from_coords(pts);
  inst.coords = std::move(pts);
  validate(inst);
  return inst;
}

CvrpInstance sub_instance(const CvrpInstance& inst, std::span<const int> nodes) {
  std::vector<int> index = {0};
  index.insert(index.end(), nodes.begin(), nodes.end());
  const std::size_t dim = index.size();
  Matrix m(dim, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m[i][j] = inst.cost[index[i]][index[j]];

  CvrpInstance sub;
  sub.name = inst.name;
  sub.n = static_cast<int>(nodes.size());
  sub.cost = std::move(m);
  sub.vehicles = 1;
  sub.capacity = std::max(sub.n, 1);
  if (inst.coords) {
    std::vector<Point> pts;
    for (int k : index) pts.push_back((*inst.coords)[k]);
    sub.coords = std::move(pts);
  }
  validate(sub);
  return sub;
}

}  // namespace qroute
