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

#include "qroute/qubo.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qroute/errors.hpp"

namespace qroute {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void check_dense(int bits) {
  if (bits > kMaxQubits)
    throw GuardError("dense cost table over " + std::to_string(bits) +
                     " bits exceeds the " + std::to_string(kMaxQubits) +
                     "-qubit ceiling");
}

}  // namespace

QuboModel::QuboModel(int bits) : bits_(bits) {
  if (bits < 0 || bits > 64)
    throw std::invalid_argument("QUBO variable count must be in 0..64");
}

void QuboModel::add_linear(int i, double v) {
  if (i < 0 || i >= bits_) throw std::out_of_range("QUBO bit out of range");
  linear_[i] += v;
}

void QuboModel::add_quadratic(int i, int j, double v) {
  if (i == j) {
    add_linear(i, v);
    return;
  }
  if (i < 0 || j < 0 || i >= bits_ || j >= bits_)
    throw std::out_of_range("QUBO bit out of range");
  quadratic_[{std::min(i, j), std::max(i, j)}] += v;
}

void QuboModel::add_squared(double weight,
                            std::span<const std::pair<int, double>> terms,
                            double constant) {
  offset_ += weight * constant * constant;
  for (std::size_t a = 0; a < terms.size(); ++a) {
    const auto [i, ci] = terms[a];
    add_linear(i, weight * (ci * ci + 2.0 * constant * ci));
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      const auto [j, cj] = terms[b];
      add_quadratic(i, j, 2.0 * weight * ci * cj);
    }
  }
}

void QuboModel::prune() {
  std::erase_if(linear_, [](const auto& kv) { return kv.second == 0.0; });
  std::erase_if(quadratic_, [](const auto& kv) { return kv.second == 0.0; });
}

double QuboModel::value(std::uint64_t x) const {
  double v = offset_;
  for (const auto& [i, c] : linear_)
    if ((x >> i) & 1U) v += c;
  for (const auto& [ij, c] : quadratic_)
    if (((x >> ij.first) & 1U) && ((x >> ij.second) & 1U)) v += c;
  return v;
}

std::vector<double> QuboModel::diagonal() const {
  check_dense(bits_);
  std::vector<double> out(std::size_t{1} << bits_);
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = value(x);
  return out;
}

std::string QuboModel::to_text() const {
  std::ostringstream os;
  os << "offset " << num(offset_) << '\n';
  for (const auto& [i, c] : linear_) os << "lin " << i << ' ' << num(c) << '\n';
  for (const auto& [ij, c] : quadratic_)
    os << "quad " << ij.first << ' ' << ij.second << ' ' << num(c) << '\n';
  return os.str();
}

DiagonalCost::DiagonalCost(BinaryLayout layout, std::vector<double> values,
                           double infeasible_penalty)
    : layout_(std::move(layout)),
      values_(std::move(values)),
      penalty_(infeasible_penalty) {
  if (values_.size() != std::size_t{1} << layout_.qubits())
    throw std::invalid_argument("diagonal cost size does not match layout");
}

double penalty_weight(const CvrpInstance& instance) {
  // A dropped node saves at most 2*maxW, so n = 1 still needs the factor 2.
  return std::max(instance.n, 2) * (1.0 + instance.max_cost());
}

QuboModel build_tsp_onehot(const CvrpInstance& inst, double A) {
  if (inst.vehicles != 1)
    throw std::invalid_argument("one-hot TSP model needs exactly one vehicle");
  const int n = inst.n;
  const OneHotLayout layout(Shape::tsp(n));
  const auto& W = inst.cost;
  QuboModel m(layout.qubits());

  for (int j = 1; j < n; ++j)
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v)
        if (u != v) m.add_quadratic(layout.bit(u, j), layout.bit(v, j + 1), W[u][v]);
  for (int u = 1; u <= n; ++u) {
    m.add_linear(layout.bit(u, 1), W[0][u]);
    m.add_linear(layout.bit(u, n), W[u][0]);
  }

  std::vector<std::pair<int, double>> terms;
  for (int u = 1; u <= n; ++u) {
    terms.clear();
    for (int j = 1; j <= n; ++j) terms.emplace_back(layout.bit(u, j), 1.0);
    m.add_squared(A, terms, -1.0);
  }
  for (int j = 1; j <= n; ++j) {
    terms.clear();
    for (int u = 1; u <= n; ++u) terms.emplace_back(layout.bit(u, j), 1.0);
    m.add_squared(A, terms, -1.0);
  }
  m.prune();
  return m;
}

QuboModel build_cvrp_onehot(const CvrpInstance& inst, double A) {
  const int n = inst.n;
  const int C = inst.capacity;
  const int V = inst.vehicles;
  const OneHotLayout layout(Shape::cvrp(n, C, V));
  const auto& W = inst.cost;
  const bool tight = n == C * V;
  QuboModel m(layout.qubits());
  std::vector<std::pair<int, double>> terms;

  for (int v = 1; v <= V; ++v) {
    for (int u = 1; u <= n; ++u) {
      m.add_linear(layout.bit(u, 1, v), W[0][u]);
      m.add_linear(layout.bit(u, C, v), W[u][0]);
    }
    for (int j = 1; j < C; ++j) {
      for (int u = 1; u <= n; ++u) {
        for (int w = 1; w <= n; ++w) {
          const int a = layout.bit(u, j, v);
          const int b = layout.bit(w, j + 1, v);
          if (tight) {
            if (u != w) m.add_quadratic(a, b, W[u][w]);
          } else {
            // [loc_j = u][loc_{j+1} = depot] = x_a (1 - o_{j+1}) and its mirror.
            m.add_quadratic(a, b, W[u][w] - W[u][0] - W[0][w]);
          }
        }
        if (!tight) {
          m.add_linear(layout.bit(u, j, v), W[u][0]);
          m.add_linear(layout.bit(u, j + 1, v), W[0][u]);
        }
      }
    }

    if (tight) {
      for (int j = 1; j <= C; ++j) {
        terms.clear();
        for (int u = 1; u <= n; ++u) terms.emplace_back(layout.bit(u, j, v), 1.0);
        m.add_squared(A, terms, -1.0);
      }
      continue;
    }

    for (int j = 1; j <= C; ++j)
      for (int u = 1; u <= n; ++u)
        for (int w = u + 1; w <= n; ++w)
          m.add_quadratic(layout.bit(u, j, v), layout.bit(w, j, v), A);

    // Packing: with o_0 = 1 and o_{C+1} = 0, sum_j (o_{j+1} - o_j)^2 >= 1 for
    // any integer occupancies, with equality exactly for a 1..1 0..0 profile.
    auto occupancy = [&](int j, double sign) {
      for (int u = 1; u <= n; ++u) terms.emplace_back(layout.bit(u, j, v), sign);
    };
    terms.clear();
    occupancy(1, 1.0);
    m.add_squared(A, terms, -1.0);
    for (int j = 1; j < C; ++j) {
      terms.clear();
      occupancy(j + 1, 1.0);
      occupancy(j, -1.0);
      m.add_squared(A, terms, 0.0);
    }
    terms.clear();
    occupancy(C, 1.0);
    m.add_squared(A, terms, 0.0);
    m.add_constant(-A);
  }

  for (int u = 1; u <= n; ++u) {
    terms.clear();
    for (int v = 1; v <= V; ++v)
      for (int j = 1; j <= C; ++j) terms.emplace_back(layout.bit(u, j, v), 1.0);
    m.add_squared(A, terms, -1.0);
  }
  m.prune();
  return m;
}

DiagonalCost build_binary_cost(const CvrpInstance& inst,
                               const BinaryLayout& layout) {
  const Shape& s = layout.shape;
  const bool matches =
      s.n == inst.n &&
      (s.kind == ProblemKind::Tsp
           ? inst.is_tsp()
           : s.capacity == inst.capacity && s.vehicles == inst.vehicles);
  if (!matches)
    throw std::invalid_argument("binary layout shape does not match instance");
  check_dense(layout.qubits());

  const Layout any = layout;
  constexpr double kUnset = -1.0;
  std::vector<double> values(std::size_t{1} << layout.qubits(), kUnset);
  double worst_feasible = 0.0;
  for (std::uint64_t x = 0; x < values.size(); ++x) {
    if (!is_feasible(any, x)) continue;
    const auto decoded = decode(any, BitString{layout.qubits(), x});
    values[x] = solution_cost(inst, *decoded.solution);
    worst_feasible = std::max(worst_feasible, values[x]);
  }
  // Routes can cost up to (n+V)*maxW, more than A when costs are large
  // relative to n; infeasible states must stay strictly above every route.
  const double penalty = std::max(penalty_weight(inst), worst_feasible + 1.0);
  for (auto& v : values)
    if (v == kUnset) v = penalty;
  return DiagonalCost(layout, std::move(values), penalty);
}

}  // namespace qroute
