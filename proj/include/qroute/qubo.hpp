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
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qroute/encoding.hpp"
#include "qroute/model.hpp"

namespace qroute {

/// Quadratic polynomial over `bits` binary variables:
///   offset + sum_i linear[i] x_i + sum_{i<j} quadratic[{i,j}] x_i x_j
class QuboModel {
 public:
  using Pair = std::pair<int, int>;

  explicit QuboModel(int bits);

  int bits() const { return bits_; }
  double offset() const { return offset_; }
  const std::map<int, double>& linear() const { return linear_; }
  const std::map<Pair, double>& quadratic() const { return quadratic_; }

  void add_constant(double v) { offset_ += v; }
  void add_linear(int i, double v);
  /// Order-insensitive; i == j folds into the linear term since x^2 = x.
  void add_quadratic(int i, int j, double v);
  /// Adds weight * (constant + sum_k coef_k x_k)^2, expanded.
  void add_squared(double weight, std::span<const std::pair<int, double>> terms,
                   double constant);
  /// Drops coefficients that are exactly zero.
  void prune();

  double value(std::uint64_t x) const;
  /// value() for every basis index; bits() must be small enough to allocate.
  std::vector<double> diagonal() const;

  /// Canonical text form: `offset v`, then `lin i v`, then `quad i j v`.
  std::string to_text() const;

 private:
  int bits_;
  double offset_ = 0.0;
  std::map<int, double> linear_;
  std::map<Pair, double> quadratic_;
};

/// Dense cost over all 2^q basis states of a binary layout. Feasible states
/// carry their routing cost, infeasible ones a flat penalty.
class DiagonalCost {
 public:
  DiagonalCost(BinaryLayout layout, std::vector<double> values,
               double infeasible_penalty);

  const BinaryLayout& layout() const { return layout_; }
  double value(std::uint64_t x) const { return values_.at(x); }
  std::span<const double> values() const { return values_; }
  double infeasible_penalty() const { return penalty_; }

 private:
  BinaryLayout layout_;
  std::vector<double> values_;
  double penalty_;
};

/// A = max(n, 2) * (1 + max cost entry).
double penalty_weight(const CvrpInstance& instance);

QuboModel build_tsp_onehot(const CvrpInstance& instance, double penalty);

/// Per-vehicle position chains over the OneHotLayout CVRP index map. When
/// V*C == n every slot must be filled and the model is the TSP construction
/// per vehicle; otherwise empty slots are depot passages and routes must be
/// packed into leading slots.
QuboModel build_cvrp_onehot(const CvrpInstance& instance, double penalty);

/// Infeasible states get max(A, worst feasible cost + 1).
DiagonalCost build_binary_cost(const CvrpInstance& instance,
                               const BinaryLayout& layout);

}  // namespace qroute
