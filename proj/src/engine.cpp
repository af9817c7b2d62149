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

#include "qroute/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace qroute {
namespace {

void check_width(const StateVector& sv, std::size_t cost_size) {
  if (cost_size != sv.size())
    throw std::invalid_argument("cost table width does not match state");
}

}  // namespace

StateVector::StateVector(int qubits, int max_qubits) : qubits_(qubits) {
  if (qubits < 0) throw std::invalid_argument("qubit count must be >= 0");
  if (qubits > max_qubits)
    throw GuardError("state of " + std::to_string(qubits) +
                     " qubits exceeds the " + std::to_string(max_qubits) +
                     "-qubit ceiling");
  amps_.assign(std::size_t{1} << qubits, Amplitude{0.0, 0.0});
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

StateVector init_basis(int qubits, std::uint64_t index, int max_qubits) {
  StateVector sv(qubits, max_qubits);
  if (index >= sv.size())
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " out of range for " + std::to_string(qubits) +
                            " qubits");
  sv[index] = 1.0;
  return sv;
}

StateVector init_plus(int qubits, int max_qubits) {
  if (qubits < 1) throw std::invalid_argument("init_plus needs q >= 1");
  StateVector sv(qubits, max_qubits);
  const double a = std::pow(2.0, -0.5 * qubits);
  std::ranges::fill(sv.amplitudes(), Amplitude{a, 0.0});
  return sv;
}

StateVector init_feasible_uniform(const Layout& layout, int max_qubits) {
  StateVector sv(qubits(layout), max_qubits);
  const auto feasible = enumerate_feasible(layout);
  const double a = 1.0 / std::sqrt(static_cast<double>(feasible.size()));
  for (auto x : feasible) sv[x] = a;
  return sv;
}

StateVector& apply_phase(StateVector& sv, std::span<const double> cost,
                         double gamma) {
  check_width(sv, cost.size());
  if (gamma == 0.0) return sv;
  auto amps = sv.amplitudes();
  for (std::size_t x = 0; x < amps.size(); ++x)
    amps[x] *= std::polar(1.0, -gamma * cost[x]);
  return sv;
}

StateVector& apply_phase(StateVector& sv, const QuboModel& cost, double gamma) {
  const auto table = cost.diagonal();
  return apply_phase(sv, table, gamma);
}

StateVector& apply_phase(StateVector& sv, const DiagonalCost& cost,
                         double gamma) {
  return apply_phase(sv, cost.values(), gamma);
}

StateVector& apply_x_mixer(StateVector& sv, double beta) {
  if (beta == 0.0) return sv;
  const double c = std::cos(beta);
  const Amplitude mis{0.0, -std::sin(beta)};
  auto amps = sv.amplitudes();
  for (int q = 0; q < sv.qubits(); ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t x = 0; x < amps.size(); ++x) {
      if (x & bit) continue;
      const Amplitude a0 = amps[x];
      const Amplitude a1 = amps[x | bit];
      amps[x] = c * a0 + mis * a1;
      amps[x | bit] = c * a1 + mis * a0;
    }
  }
  return sv;
}

StateVector& apply_partial_swap(StateVector& sv, const BinaryLayout& layout,
                                RegisterPair pair, double theta) {
  if (layout.qubits() != sv.qubits())
    throw std::invalid_argument("layout width does not match state");
  if (pair.first == pair.second || pair.first < 0 || pair.second < 0 ||
      pair.first >= layout.registers || pair.second >= layout.registers)
    throw std::out_of_range("register pair out of range");

  const Amplitude diag{std::cos(theta), 0.0};
  const Amplitude off{0.0, -std::sin(theta)};
  const Amplitude fixed = std::polar(1.0, -theta);
  auto amps = sv.amplitudes();
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    const auto a = layout.register_value(x, pair.first);
    const auto b = layout.register_value(x, pair.second);
    if (a == b) {
      amps[x] *= fixed;
      continue;
    }
    const auto y = layout.with_register(layout.with_register(x, pair.first, b),
                                        pair.second, a);
    if (y < x) continue;
    const Amplitude ax = amps[x];
    const Amplitude ay = amps[y];
    amps[x] = diag * ax + off * ay;
    amps[y] = diag * ay + off * ax;
  }
  return sv;
}

MixerSchedule MixerSchedule::odd_even(int registers) {
  MixerSchedule s;
  for (int start : {0, 1}) {
    std::vector<RegisterPair> round;
    for (int k = start; k + 1 < registers; k += 2) round.push_back({k, k + 1});
    if (!round.empty()) s.rounds.push_back(std::move(round));
  }
  return s;
}

std::vector<RegisterPair> MixerSchedule::pairs() const {
  std::vector<RegisterPair> out;
  for (const auto& r : rounds) out.insert(out.end(), r.begin(), r.end());
  return out;
}

StateVector& apply_hard_mixer(StateVector& sv, const BinaryLayout& layout,
                              double theta, const MixerSchedule& schedule) {
  if (layout.registers < 2)
    throw std::invalid_argument("hard mixer needs at least two registers");
  for (const auto& round : schedule.rounds)
    for (const auto& pair : round) apply_partial_swap(sv, layout, pair, theta);
  return sv;
}

double expectation(const StateVector& sv, std::span<const double> cost) {
  check_width(sv, cost.size());
  double e = 0.0;
  for (std::size_t x = 0; x < sv.size(); ++x) e += sv.probability(x) * cost[x];
  return e;
}

double expectation(const StateVector& sv, const QuboModel& cost) {
  return expectation(sv, cost.diagonal());
}

double expectation(const StateVector& sv, const DiagonalCost& cost) {
  return expectation(sv, cost.values());
}

std::map<std::uint64_t, std::uint64_t> sample(const StateVector& sv,
                                              std::uint64_t shots,
                                              std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample needs shots >= 1");
  std::vector<double> cdf(sv.size());
  double acc = 0.0;
  for (std::size_t x = 0; x < sv.size(); ++x) {
    acc += sv.probability(x);
    cdf[x] = acc;
  }
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    auto x = static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
    x = std::min<std::uint64_t>(x, sv.size() - 1);
    ++counts[x];
  }
  return counts;
}

double leakage(const StateVector& sv, std::span<const char> feasible_mask) {
  check_width(sv, feasible_mask.size());
  double mass = 0.0;
  for (std::size_t x = 0; x < sv.size(); ++x)
    if (!feasible_mask[x]) mass += sv.probability(x);
  return mass;
}

double leakage(const StateVector& sv, const Layout& layout) {
  if (qubits(layout) != sv.qubits())
    throw std::invalid_argument("layout width does not match state");
  return leakage(sv, feasibility_mask(layout));
}

void dump_state(const StateVector& sv, std::ostream& os) {
  char buf[96];
  for (std::size_t x = 0; x < sv.size(); ++x) {
    if (sv.probability(x) <= 1e-12) continue;
    std::snprintf(buf, sizeof buf, "%zu %.12g %.12g\n", x, sv[x].real(),
                  sv[x].imag());
    os << buf;
  }
}

}  // namespace qroute
