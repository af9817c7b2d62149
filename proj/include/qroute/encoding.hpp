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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qroute/model.hpp"

namespace qroute {

enum class EncodingKind { OneHot, Binary };
enum class ProblemKind { Tsp, Cvrp };

/// Register width convention for binary slot registers. `EmptyMarker` reserves
/// value 0 for an unoccupied slot and uses ceil(log2(n+1)) bits; `Compact` uses
/// ceil(log2 n) bits and is only meaningful for resource counting.
enum class SlotWidth { EmptyMarker, Compact };

struct Shape {
  ProblemKind kind = ProblemKind::Tsp;
  int n = 0;
  int capacity = 0;
  int vehicles = 1;

  static Shape tsp(int n) { return {ProblemKind::Tsp, n, n, 1}; }
  static Shape cvrp(int n, int capacity, int vehicles) {
    return {ProblemKind::Cvrp, n, capacity, vehicles};
  }
  /// TSP when one vehicle can hold every node, CVRP otherwise.
  static Shape of(const CvrpInstance& instance);

  int slots() const { return capacity * vehicles; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

/// ceil(log2 x) for x >= 1.
int ceil_log2(std::uint64_t x);

/// Bits per binary register, never less than one.
int register_width(const Shape& shape, SlotWidth mode = SlotWidth::EmptyMarker);

/// One qubit per (node, position[, vehicle]) decision variable.
struct OneHotLayout {
  Shape shape;

  explicit OneHotLayout(Shape s);
  int qubits() const;
  /// TSP: (u-1)*n + (j-1). CVRP: ((v-1)*C + (j-1))*n + (u-1). All 1-based.
  int bit(int node, int position, int vehicle = 1) const;
};

/// Registers of `width` bits. TSP: register k holds the visit position of node
/// k+1. CVRP: register s = (v-1)*C + (j-1) holds the node in that slot, 0 when
/// empty. Register k occupies bits k*width .. k*width+width-1, little-endian.
struct BinaryLayout {
  Shape shape;
  int width = 0;
  int registers = 0;

  explicit BinaryLayout(Shape s);
  int qubits() const { return width * registers; }
  std::uint64_t register_value(std::uint64_t index, int reg) const;
  std::uint64_t with_register(std::uint64_t index, int reg,
                              std::uint64_t value) const;
};

using Layout = std::variant<OneHotLayout, BinaryLayout>;

Layout make_layout(EncodingKind kind, const Shape& shape);
int qubits(const Layout& layout);
const Shape& shape_of(const Layout& layout);
EncodingKind kind_of(const Layout& layout);

struct BitString {
  int width = 0;
  std::uint64_t value = 0;

  /// 0/1 text with qubit 0 rightmost.
  std::string to_string() const;
  friend bool operator==(const BitString&, const BitString&) = default;
};

enum class ViolationKind {
  NodeCount,      ///< one-hot row / node coverage sum != 1
  PositionCount,  ///< one-hot column / slot occupancy out of bounds
  SlotGap,        ///< occupied one-hot CVRP slot after an empty one
  PositionRange,  ///< binary register value out of range
  DuplicatePosition,
  MissingNode,
  DuplicateNode,
};

struct Violation {
  ViolationKind kind;
  int index = 0;  ///< node, position, slot or register concerned
  int count = 0;  ///< observed sum or value

  std::string describe() const;
};

struct DecodeResult {
  std::optional<Solution> solution;
  std::vector<Violation> violations;

  bool feasible() const { return solution.has_value(); }
};

BitString encode(const Layout& layout, const Solution& solution);
DecodeResult decode(const Layout& layout, const BitString& bits);

/// Cheaper membership test, equivalent to decode(...).feasible().
bool is_feasible(const Layout& layout, std::uint64_t index);

int qubit_count(EncodingKind kind, const Shape& shape,
                SlotWidth mode = SlotWidth::EmptyMarker);

/// |feasible set| for the layout of `kind` over `shape`, as a double (exact up
/// to 2^53).
double feasible_count(EncodingKind kind, const Shape& shape);

struct Fraction {
  double value = 0.0;
  /// Reduced numerator/denominator when both fit in 64 bits.
  std::optional<std::uint64_t> numerator;
  std::optional<std::uint64_t> denominator;
};

inline constexpr int kMaxExactFractionNodes = 20;

Fraction feasible_fraction(EncodingKind kind, const Shape& shape);

inline constexpr std::uint64_t kMaxFeasibleEnumeration = 1'000'000;

/// Sorted, duplicate-free feasible basis indices. Throws GuardError above
/// kMaxFeasibleEnumeration states.
std::vector<std::uint64_t> enumerate_feasible(const Layout& layout);

/// 0/1 per basis index; same guard as enumerate_feasible.
std::vector<char> feasibility_mask(const Layout& layout);

}  // namespace qroute
