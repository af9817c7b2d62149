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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qroute {

using Matrix = std::vector<std::vector<double>>;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// A capacitated routing instance. Index 0 of the cost matrix is the depot;
/// nodes are 1..n. Capacity counts stops per vehicle.
struct CvrpInstance {
  std::string name;
  int n = 0;
  Matrix cost;
  int vehicles = 1;
  int capacity = 1;
  std::optional<std::vector<Point>> coords;

  /// Single vehicle that can hold every node.
  bool is_tsp() const { return vehicles == 1 && capacity >= n; }
  double max_cost() const;
};

/// Visit order for one vehicle; the depot is implicit at both ends.
using Route = std::vector<int>;

struct Solution {
  std::vector<Route> routes;
  double cost = 0.0;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.routes == b.routes;
  }
};

/// Throws std::invalid_argument if the instance breaks any structural rule.
void validate(const CvrpInstance& instance);

CvrpInstance make_instance(std::string name, Matrix cost, int vehicles,
                           int capacity);
CvrpInstance make_tsp(std::string name, Matrix cost);

CvrpInstance load_instance(std::string_view document);
CvrpInstance load_instance_file(const std::filesystem::path& path);
std::string save_instance(const CvrpInstance& instance);

/// Euclidean distance rounded to 6 decimals.
double euclidean_cost(const Point& a, const Point& b);
Matrix cost_from_coords(std::span<const Point> coords);

double route_cost(const CvrpInstance& instance, const Route& route);

/// Sums route costs after checking that every node is covered exactly once and
/// no route exceeds capacity.
double solution_cost(const CvrpInstance& instance, const Solution& solution);

/// Routes sorted lexicographically so that vehicle relabelings compare equal.
Solution canonical(Solution solution);

/// Partitions nodes 1..n into `vehicles` groups of at most `capacity` nodes.
/// Groups beyond the number of nodes are empty.
std::vector<std::vector<int>> cluster_nodes(const CvrpInstance& instance);

CvrpInstance generate_instance(std::uint64_t seed, int n, int vehicles,
                               int capacity, double box);

/// Single-vehicle instance over the depot and `nodes`; node k of the result is
/// nodes[k-1] of the parent.
CvrpInstance sub_instance(const CvrpInstance& instance,
                          std::span<const int> nodes);

}  // namespace qroute
