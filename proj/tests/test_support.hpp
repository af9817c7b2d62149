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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "qroute/model.hpp"

namespace qroute::testing {

inline CvrpInstance tsp2() {
  return make_tsp("tsp2", {{0, 1, 4}, {2, 0, 1}, {1, 3, 0}});
}

inline CvrpInstance tsp3() {
  return make_tsp("tsp3", {{0, 5, 9, 4}, {5, 0, 3, 8}, {9, 3, 0, 2}, {4, 8, 2, 0}});
}

/// Nodes 1,2 far from the depot, 3,4 near it; each pair mutually close.
inline CvrpInstance cvrp4() {
  return make_instance("cvrp4",
                       {{0, 9, 9, 1, 1},
                        {9, 0, 0.5, 10, 10},
                        {9, 0.5, 0, 10, 10},
                        {1, 10, 10, 0, 0.5},
                        {1, 10, 10, 0.5, 0}},
                       2, 2);
}

/// Random asymmetric integer costs in [1, hi]; integers keep ties exact.
inline CvrpInstance random_integer(std::uint64_t seed, int n, int vehicles,
                                   int capacity, int hi = 9) {
  std::mt19937_64 rng(seed);
  Matrix m(n + 1, std::vector<double>(n + 1, 0.0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j) m[i][j] = 1.0 + static_cast<double>(rng() % hi);
  return make_instance("rand", std::move(m), vehicles, capacity);
}

/// Independent oracle: every permutation, costed by walking the matrix.
inline std::pair<double, std::set<Route>> all_orders(const CvrpInstance& inst) {
  Route r(inst.n);
  std::iota(r.begin(), r.end(), 1);
  double best = 1e300;
  std::set<Route> arg;
  do {
    double c = 0.0;
    int prev = 0;
    for (int u : r) {
      c += inst.cost[prev][u];
      prev = u;
    }
    c += inst.cost[prev][0];
    if (c < best) {
      best = c;
      arg.clear();
    }
    if (c == best) arg.insert(r);
  } while (std::next_permutation(r.begin(), r.end()));
  return {best, arg};
}

}  // namespace qroute::testing
