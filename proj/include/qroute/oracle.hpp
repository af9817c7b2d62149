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
#include <vector>

#include "qroute/model.hpp"
#include "qroute/qubo.hpp"

namespace qroute {

/// Optimal value with every optimal argument. Ties are collected with a
/// relative tolerance of kTieTolerance, which is exact for integer costs.
template <class T>
struct OracleResult {
  double value = 0.0;
  std::vector<T> argmin;
};

using RoutingOptimum = OracleResult<Solution>;
using QuboOptimum = OracleResult<std::uint64_t>;

inline constexpr double kTieTolerance = 1e-9;
inline constexpr int kMaxTspOracleNodes = 9;
inline constexpr int kMaxCvrpOracleNodes = 7;
inline constexpr int kMaxQuboOracleBits = 24;

bool same_cost(double a, double b);

/// All n! visit orders. Needs V == 1 and n <= kMaxTspOracleNodes.
RoutingOptimum brute_force_tsp(const CvrpInstance& instance);

/// Every capacity-respecting partition times every ordering. Argmin entries are
/// canonical (see canonical()), so vehicle relabelings collapse.
RoutingOptimum brute_force_cvrp(const CvrpInstance& instance);

/// brute_force_tsp for TSP-shaped instances, brute_force_cvrp otherwise.
RoutingOptimum brute_force(const CvrpInstance& instance);

QuboOptimum qubo_min(const QuboModel& model);

}  // namespace qroute
