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

#include "qroute/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qroute/errors.hpp"

namespace qroute {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Shape-level validity of a solution: n nodes, each once, within capacity.
void check_solution(const Shape& shape, const Solution& solution) {
  const std::size_t max_routes =
      shape.kind == ProblemKind::Tsp ? 1 : static_cast<std::size_t>(shape.vehicles);
  require(solution.routes.size() <= max_routes,
          "solution shape mismatch: too many routes");
  std::vector<int> seen(static_cast<std::size_t>(shape.n) + 1, 0);
  for (const auto& route : solution.routes) {
    require(route.size() <= static_cast<std::size_t>(shape.capacity),
            "solution shape mismatch: route longer than capacity");
    for (int u : route) {
      require(u >= 1 && u <= shape.n, "solution shape mismatch: bad node");
      require(++seen[u] == 1, "solution shape mismatch: duplicated node");
    }
  }
  for (int u = 1; u <= shape.n; ++u)
    require(seen[u] == 1, "solution shape mismatch: missing node");
}

long double factorial(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Labeled vehicles, each an ordered list of at most `capacity` distinct nodes.
long double onehot_cvrp_count(const Shape& s) {
  // ways[r] = placements of r remaining nodes into the vehicles handled so far.
  std::vector<long double> ways(static_cast<std::size_t>(s.n) + 1, 0.0L);
  ways[0] = 1.0L;
  for (int v = 0; v < s.vehicles; ++v) {
    std::vector<long double> next(ways.size(), 0.0L);
    for (int placed = 0; placed <= s.n; ++placed) {
      if (ways[placed] == 0.0L) continue;
      long double perms = 1.0L;  // P(n - placed, k)
      for (int k = 0; k <= s.capacity && placed + k <= s.n; ++k) {
        if (k > 0) perms *= (s.n - placed - k + 1);
        next[placed + k] += ways[placed] * perms;
      }
    }
    ways = std::move(next);
  }
  return ways[s.n];
}

long double feasible_count_ld(EncodingKind kind, const Shape& s) {
  if (s.kind == ProblemKind::Tsp) return factorial(s.n);
  if (kind == EncodingKind::OneHot) return onehot_cvrp_count(s);
  long double p = 1.0L;
  for (int k = 0; k < s.n; ++k) p *= (s.slots() - k);
  return s.n > s.slots() ? 0.0L : p;
}

void guard_enumeration(const Layout& layout) {
  const long double count =
      feasible_count_ld(kind_of(layout), shape_of(layout));
  if (count > static_cast<long double>(kMaxFeasibleEnumeration))
    throw GuardError("feasible set too large to enumerate (" +
                     std::to_string(static_cast<double>(count)) + " states)");
  if (qubits(layout) > 62)
    throw GuardError("layout too wide to index basis states");
}

}  // namespace

Shape Shape::of(const CvrpInstance& instance) {
  if (instance.is_tsp()) return tsp(instance.n);
  return cvrp(instance.n, instance.capacity, instance.vehicles);
}

int ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return std::bit_width(x - 1);
}

int register_width(const Shape& shape, SlotWidth mode) {
  const std::uint64_t span =
      shape.kind == ProblemKind::Cvrp && mode == SlotWidth::EmptyMarker
          ? static_cast<std::uint64_t>(shape.n) + 1
          : static_cast<std::uint64_t>(shape.n);
  return std::max(1, ceil_log2(span));
}

OneHotLayout::OneHotLayout(Shape s) : shape(s) {
  require(s.n >= 1 && s.capacity >= 1 && s.vehicles >= 1,
          "one-hot layout needs n, C, V >= 1");
}

int OneHotLayout::qubits() const {
  if (shape.kind == ProblemKind::Tsp) return shape.n * shape.n;
  return shape.n * shape.capacity * shape.vehicles;
}

int OneHotLayout::bit(int node, int position, int vehicle) const {
  if (shape.kind == ProblemKind::Tsp) return (node - 1) * shape.n + (position - 1);
  return ((vehicle - 1) * shape.capacity + (position - 1)) * shape.n + (node - 1);
}

BinaryLayout::BinaryLayout(Shape s) : shape(s) {
  require(s.n >= 1 && s.capacity >= 1 && s.vehicles >= 1,
          "binary layout needs n, C, V >= 1");
  width = register_width(s);
  registers = s.kind == ProblemKind::Tsp ? s.n : s.slots();
}

std::uint64_t BinaryLayout::register_value(std::uint64_t index, int reg) const {
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  return (index >> (reg * width)) & mask;
}

std::uint64_t BinaryLayout::with_register(std::uint64_t index, int reg,
                                          std::uint64_t value) const {
  const int shift = reg * width;
  const std::uint64_t mask = ((std::uint64_t{1} << width) - 1) << shift;
  return (index & ~mask) | ((value << shift) & mask);
}

Layout make_layout(EncodingKind kind, const Shape& shape) {
  if (kind == EncodingKind::OneHot) return OneHotLayout(shape);
  return BinaryLayout(shape);
}

int qubits(const Layout& layout) {
  return std::visit([](const auto& l) { return l.qubits(); }, layout);
}

const Shape& shape_of(const Layout& layout) {
  return std::visit([](const auto& l) -> const Shape& { return l.shape; },
                    layout);
}

EncodingKind kind_of(const Layout& layout) {
  return std::holds_alternative<OneHotLayout>(layout) ? EncodingKind::OneHot
                                                      : EncodingKind::Binary;
}

std::string BitString::to_string() const {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if ((value >> i) & 1U) s[static_cast<std::size_t>(width - 1 - i)] = '1';
  return s;
}

std::string Violation::describe() const {
  const std::string i = std::to_string(index);
  const std::string c = std::to_string(count);
  switch (kind) {
    case ViolationKind::NodeCount:
      return "node " + i + " assigned " + c + " times";
    case ViolationKind::PositionCount:
      return "position " + i + " used " + c + " times";
    case ViolationKind::SlotGap:
      return "slot " + i + " occupied after an empty slot";
    case ViolationKind::PositionRange:
      return "register " + i + " holds out-of-range value " + c;
    case ViolationKind::DuplicatePosition:
      return "position " + i + " held by " + c + " registers";
    case ViolationKind::MissingNode:
      return "node " + i + " missing";
    case ViolationKind::DuplicateNode:
      return "node " + i + " appears " + c + " times";
  }
  return "unknown violation";
}

BitString encode(const Layout& layout, const Solution& solution) {
  const Shape& s = shape_of(layout);
  check_solution(s, solution);
  BitString out{qubits(layout), 0};
  if (const auto* oh = std::get_if<OneHotLayout>(&layout)) {
    for (std::size_t v = 0; v < solution.routes.size(); ++v) {
      const auto& route = solution.routes[v];
      for (std::size_t j = 0; j < route.size(); ++j)
        out.value |= std::uint64_t{1}
                     << oh->bit(route[j], static_cast<int>(j) + 1,
                                static_cast<int>(v) + 1);
    }
    return out;
  }
  const auto& bin = std::get<BinaryLayout>(layout);
  if (s.kind == ProblemKind::Tsp) {
    const auto& route = solution.routes.front();
    for (std::size_t pos = 0; pos < route.size(); ++pos)
      out.value = bin.with_register(out.value, route[pos] - 1, pos);
    return out;
  }
  for (std::size_t v = 0; v < solution.routes.size(); ++v) {
    const auto& route = solution.routes[v];
    for (std::size_t j = 0; j < route.size(); ++j) {
      const int slot = static_cast<int>(v) * s.capacity + static_cast<int>(j);
      out.value = bin.with_register(out.value, slot,
                                    static_cast<std::uint64_t>(route[j]));
    }
  }
  return out;
}

namespace {

DecodeResult decode_onehot_tsp(const OneHotLayout& l, std::uint64_t x) {
  const int n = l.shape.n;
  DecodeResult r;
  auto set = [&](int u, int j) { return ((x >> l.bit(u, j)) & 1U) != 0; };
  for (int u = 1; u <= n; ++u) {
    int sum = 0;
    for (int j = 1; j <= n; ++j) sum += set(u, j);
    if (sum != 1) r.violations.push_back({ViolationKind::NodeCount, u, sum});
  }
  for (int j = 1; j <= n; ++j) {
    int sum = 0;
    for (int u = 1; u <= n; ++u) sum += set(u, j);
    if (sum != 1) r.violations.push_back({ViolationKind::PositionCount, j, sum});
  }
  if (!r.violations.empty()) return r;
  Route route(static_cast<std::size_t>(n));
  for (int u = 1; u <= n; ++u)
    for (int j = 1; j <= n; ++j)
      if (set(u, j)) route[j - 1] = u;
  r.solution = Solution{{route}, 0.0};
  return r;
}

DecodeResult decode_onehot_cvrp(const OneHotLayout& l, std::uint64_t x) {
  const Shape& s = l.shape;
  DecodeResult r;
  auto set = [&](int u, int j, int v) {
    return ((x >> l.bit(u, j, v)) & 1U) != 0;
  };
  for (int u = 1; u <= s.n; ++u) {
    int sum = 0;
    for (int v = 1; v <= s.vehicles; ++v)
      for (int j = 1; j <= s.capacity; ++j) sum += set(u, j, v);
    if (sum != 1) r.violations.push_back({ViolationKind::NodeCount, u, sum});
  }
  for (int v = 1; v <= s.vehicles; ++v) {
    bool empty_seen = false;
    for (int j = 1; j <= s.capacity; ++j) {
      int occ = 0;
      for (int u = 1; u <= s.n; ++u) occ += set(u, j, v);
      const int slot = (v - 1) * s.capacity + (j - 1);
      if (occ > 1) r.violations.push_back({ViolationKind::PositionCount, slot, occ});
      if (occ == 0) {
        empty_seen = true;
      } else if (empty_seen) {
        r.violations.push_back({ViolationKind::SlotGap, slot, occ});
      }
    }
  }
  if (!r.violations.empty()) return r;
  Solution sol;
  sol.routes.resize(static_cast<std::size_t>(s.vehicles));
  for (int v = 1; v <= s.vehicles; ++v)
    for (int j = 1; j <= s.capacity; ++j)
      for (int u = 1; u <= s.n; ++u)
        if (set(u, j, v)) sol.routes[v - 1].push_back(u);
  r.solution = std::move(sol);
  return r;
}

DecodeResult decode_binary_tsp(const BinaryLayout& l, std::uint64_t x) {
  const int n = l.shape.n;
  DecodeResult r;
  std::vector<int> holders(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    const auto pos = l.register_value(x, k);
    if (pos >= static_cast<std::uint64_t>(n)) {
      r.violations.push_back(
          {ViolationKind::PositionRange, k, static_cast<int>(pos)});
    } else {
      ++holders[pos];
    }
  }
  for (int p = 0; p < n; ++p)
    if (holders[p] > 1)
      r.violations.push_back({ViolationKind::DuplicatePosition, p, holders[p]});
  if (!r.violations.empty()) return r;
  Route route(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) route[l.register_value(x, k)] = k + 1;
  r.solution = Solution{{route}, 0.0};
  return r;
}

DecodeResult decode_binary_cvrp(const BinaryLayout& l, std::uint64_t x) {
  const Shape& s = l.shape;
  DecodeResult r;
  std::vector<int> count(static_cast<std::size_t>(s.n) + 1, 0);
  for (int k = 0; k < l.registers; ++k) {
    const auto node = l.register_value(x, k);
    if (node > static_cast<std::uint64_t>(s.n)) {
      r.violations.push_back(
          {ViolationKind::PositionRange, k, static_cast<int>(node)});
    } else {
      ++count[node];
    }
  }
  for (int u = 1; u <= s.n; ++u) {
    if (count[u] == 0) r.violations.push_back({ViolationKind::MissingNode, u, 0});
    if (count[u] > 1)
      r.violations.push_back({ViolationKind::DuplicateNode, u, count[u]});
  }
  if (!r.violations.empty()) return r;
  Solution sol;
  sol.routes.resize(static_cast<std::size_t>(s.vehicles));
  for (int k = 0; k < l.registers; ++k) {
    const auto node = l.register_value(x, k);
    if (node != 0) sol.routes[k / s.capacity].push_back(static_cast<int>(node));
  }
  r.solution = std::move(sol);
  return r;
}

}  // namespace

DecodeResult decode(const Layout& layout, const BitString& bits) {
  if (bits.width != qubits(layout))
    throw std::invalid_argument("bitstring width " + std::to_string(bits.width) +
                                " does not match layout width " +
                                std::to_string(qubits(layout)));
  const Shape& s = shape_of(layout);
  if (const auto* oh = std::get_if<OneHotLayout>(&layout))
    return s.kind == ProblemKind::Tsp ? decode_onehot_tsp(*oh, bits.value)
                                      : decode_onehot_cvrp(*oh, bits.value);
  const auto& bin = std::get<BinaryLayout>(layout);
  return s.kind == ProblemKind::Tsp ? decode_binary_tsp(bin, bits.value)
                                    : decode_binary_cvrp(bin, bits.value);
}

bool is_feasible(const Layout& layout, std::uint64_t index) {
  const Shape& s = shape_of(layout);
  if (const auto* bin = std::get_if<BinaryLayout>(&layout)) {
    std::uint64_t seen = 0;
    const int regs = bin->registers;
    int distinct = 0;
    for (int k = 0; k < regs; ++k) {
      const auto v = bin->register_value(index, k);
      if (s.kind == ProblemKind::Tsp) {
        if (v >= static_cast<std::uint64_t>(s.n)) return false;
      } else {
        if (v > static_cast<std::uint64_t>(s.n)) return false;
        if (v == 0) continue;
      }
      const std::uint64_t b = std::uint64_t{1} << v;
      if (seen & b) return false;
      seen |= b;
      ++distinct;
    }
    return distinct == s.n;
  }
  return decode(layout, BitString{qubits(layout), index}).feasible();
}

int qubit_count(EncodingKind kind, const Shape& shape, SlotWidth mode) {
  if (kind == EncodingKind::OneHot) return OneHotLayout(shape).qubits();
  const int w = register_width(shape, mode);
  return shape.kind == ProblemKind::Tsp ? shape.n * w : shape.slots() * w;
}

double feasible_count(EncodingKind kind, const Shape& shape) {
  return static_cast<double>(feasible_count_ld(kind, shape));
}

Fraction feasible_fraction(EncodingKind kind, const Shape& shape) {
  if (shape.n > kMaxExactFractionNodes)
    throw GuardError("feasible_fraction supports n <= " +
                     std::to_string(kMaxExactFractionNodes));
  const long double count = feasible_count_ld(kind, shape);
  const int q = qubit_count(kind, shape);
  Fraction f;
  f.value = static_cast<double>(std::ldexp(count, -q));
  if (count < 0x1.0p63L && count == std::floor(count)) {
    auto num = static_cast<std::uint64_t>(count);
    const int shift = num == 0 ? q : std::min(std::countr_zero(num), q);
    const int exp = q - shift;
    if (exp <= 62) {
      f.numerator = num >> shift;
      f.denominator = std::uint64_t{1} << exp;
    }
  }
  return f;
}

std::vector<std::uint64_t> enumerate_feasible(const Layout& layout) {
  guard_enumeration(layout);
  const Shape& s = shape_of(layout);
  std::vector<std::uint64_t> out;

  if (s.kind == ProblemKind::Tsp) {
    Route route(static_cast<std::size_t>(s.n));
    std::iota(route.begin(), route.end(), 1);
    do {
      out.push_back(encode(layout, Solution{{route}, 0.0}).value);
    } while (std::next_permutation(route.begin(), route.end()));
  } else if (const auto* bin = std::get_if<BinaryLayout>(&layout)) {
    // Injective placement of nodes 1..n into slot registers.
    std::vector<bool> used(static_cast<std::size_t>(bin->registers), false);
    auto place = [&](auto&& self, int node, std::uint64_t index) -> void {
      if (node > s.n) {
        out.push_back(index);
        return;
      }
      for (int k = 0; k < bin->registers; ++k) {
        if (used[k]) continue;
        used[k] = true;
        self(self, node + 1,
             bin->with_register(index, k, static_cast<std::uint64_t>(node)));
        used[k] = false;
      }
    };
    place(place, 1, 0);
  } else {
    const auto& oh = std::get<OneHotLayout>(layout);
    std::vector<bool> used(static_cast<std::size_t>(s.n) + 1, false);
    // Vehicle v fills positions 1..len in order; the route may stop early.
    auto fill = [&](auto&& self, int v, int pos, int placed,
                    std::uint64_t index) -> void {
      if (v > s.vehicles) {
        if (placed == s.n) out.push_back(index);
        return;
      }
      const int remaining_capacity =
          (s.vehicles - v) * s.capacity + (s.capacity - pos + 1);
      if (s.n - placed > remaining_capacity) return;
      self(self, v + 1, 1, placed, index);
      if (pos > s.capacity) return;
      for (int u = 1; u <= s.n; ++u) {
        if (used[u]) continue;
        used[u] = true;
        self(self, v, pos + 1, placed + 1,
             index | (std::uint64_t{1} << oh.bit(u, pos, v)));
        used[u] = false;
      }
    };
    fill(fill, 1, 1, 0, 0);
  }
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<char> feasibility_mask(const Layout& layout) {
  if (qubits(layout) > 30) throw GuardError("layout too wide for a dense mask");
  const auto feasible = enumerate_feasible(layout);
  std::vector<char> mask(std::size_t{1} << qubits(layout), 0);
  for (auto x : feasible) mask[x] = 1;
  return mask;
}

}  // namespace qroute
