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

#include "qroute/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "qroute/errors.hpp"

namespace qroute {
namespace {

template <class T>
void offer(OracleResult<T>& best, double value, T candidate) {
  if (best.argmin.empty() || (value < best.value && !same_cost(value, best.value))) {
    best.value = value;
    best.argmin.clear();
    best.argmin.push_back(std::move(candidate));
  } else if (same_cost(value, best.value)) {
    best.argmin.push_back(std::move(candidate));
    best.value = std::min(best.value, value);
  }
}

struct BlockOptimum {
  double value = 0.0;
  std::vector<Route> orders;
};

BlockOptimum best_orders(const CvrpInstance& inst, Route block) {
  BlockOptimum out;
  if (block.empty()) {
    out.orders.emplace_back();
    return out;
  }
  std::ranges::sort(block);
  OracleResult<Route> best;
  do {
    offer(best, route_cost(inst, block), block);
  } while (std::next_permutation(block.begin(), block.end()));
  out.value = best.value;
  out.orders = std::move(best.argmin);
  return out;
}

}  // namespace

bool same_cost(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kTieTolerance * scale;
}

RoutingOptimum brute_force_tsp(const CvrpInstance& inst) {
  if (inst.vehicles != 1)
    throw std::invalid_argument("brute_force_tsp needs exactly one vehicle");
  if (inst.n > kMaxTspOracleNodes)
    throw GuardError("brute_force_tsp supports n <= " +
                     std::to_string(kMaxTspOracleNodes));
  Route route(static_cast<std::size_t>(inst.n));
  std::iota(route.begin(), route.end(), 1);
  RoutingOptimum best;
  do {
    Solution s{{route}, route_cost(inst, route)};
    offer(best, s.cost, std::move(s));
  } while (std::next_permutation(route.begin(), route.end()));
  std::erase_if(best.argmin,
                [&](const Solution& s) { return !same_cost(s.cost, best.value); });
  return best;
}

RoutingOptimum brute_force_cvrp(const CvrpInstance& inst) {
  if (inst.n > kMaxCvrpOracleNodes)
    throw GuardError("brute_force_cvrp supports n <= " +
                     std::to_string(kMaxCvrpOracleNodes));
  validate(inst);

  RoutingOptimum best;
  // Set partitions in restricted-growth form: node u joins an existing block
  // or opens the next one. Blocks are unlabeled, so no relabeling duplicates.
  std::vector<Route> blocks;
  auto recurse = [&](auto&& self, int u) -> void {
    if (u > inst.n) {
      std::vector<BlockOptimum> parts;
      double total = 0.0;
      for (const auto& b : blocks) {
        parts.push_back(best_orders(inst, b));
        total += parts.back().value;
      }
      if (!best.argmin.empty() && total > best.value &&
          !same_cost(total, best.value))
        return;
      // Cartesian product of per-block optimal orders.
      std::vector<std::size_t> pick(parts.size(), 0);
      while (true) {
        Solution s;
        for (std::size_t b = 0; b < parts.size(); ++b)
          s.routes.push_back(parts[b].orders[pick[b]]);
        s.routes.resize(static_cast<std::size_t>(inst.vehicles));
        s = canonical(std::move(s));
        s.cost = solution_cost(inst, s);
        offer(best, s.cost, std::move(s));
        std::size_t b = 0;
        while (b < pick.size() && ++pick[b] == parts[b].orders.size()) pick[b++] = 0;
        if (b == pick.size()) break;
      }
      return;
    }
    // Index, not reference: deeper levels may reallocate `blocks`.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].size() >= static_cast<std::size_t>(inst.capacity)) continue;
      blocks[b].push_back(u);
      self(self, u + 1);
      blocks[b].pop_back();
    }
    if (blocks.size() < static_cast<std::size_t>(inst.vehicles)) {
      blocks.push_back({u});
      self(self, u + 1);
      blocks.pop_back();
    }
  };
  if (inst.n == 0) {
    Solution s;
    s.routes.resize(static_cast<std::size_t>(inst.vehicles));
    best.argmin.push_back(s);
    return best;
  }
  recurse(recurse, 1);

  // Drop members admitted before a strictly better optimum arrived within
  // tolerance, then order deterministically.
  std::erase_if(best.argmin,
                [&](const Solution& s) { return !same_cost(s.cost, best.value); });
  std::ranges::sort(best.argmin, [](const Solution& a, const Solution& b) {
    return a.routes < b.routes;
  });
  return best;
}

RoutingOptimum brute_force(const CvrpInstance& inst) {
  if (inst.is_tsp()) return brute_force_tsp(inst);
  return brute_force_cvrp(inst);
}

QuboOptimum qubo_min(const QuboModel& model) {
  if (model.bits() > kMaxQuboOracleBits)
    throw GuardError("qubo_min supports at most " +
                     std::to_string(kMaxQuboOracleBits) + " variables");
  QuboOptimum best;
  const std::uint64_t states = std::uint64_t{1} << model.bits();
  for (std::uint64_t x = 0; x < states; ++x) offer(best, model.value(x), x);
  std::erase_if(best.argmin,
                [&](std::uint64_t x) { return !same_cost(model.value(x), best.value); });
  return best;
}

}  // namespace qroute
