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

#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "qroute/encoding.hpp"
#include "qroute/errors.hpp"
#include "qroute/qubo.hpp"

namespace qroute {

using Amplitude = std::complex<double>;

/// Dense amplitudes over 2^q basis states, indexed with qubit 0 as the least
/// significant bit.
class StateVector {
 public:
  explicit StateVector(int qubits = 0, int max_qubits = kMaxQubits);

  int qubits() const { return qubits_; }
  std::size_t size() const { return amps_.size(); }

  std::span<Amplitude> amplitudes() { return amps_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude& operator[](std::size_t i) { return amps_[i]; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double probability(std::size_t i) const { return std::norm(amps_[i]); }
  double norm_squared() const;

 private:
  int qubits_;
  std::vector<Amplitude> amps_;
};

StateVector init_basis(int qubits, std::uint64_t index,
                       int max_qubits = kMaxQubits);
StateVector init_plus(int qubits, int max_qubits = kMaxQubits);
/// Equal weight on every feasible index of the layout, built classically.
StateVector init_feasible_uniform(const Layout& layout,
                                  int max_qubits = kMaxQubits);

/// a_x <- a_x * exp(-i * gamma * cost[x]).
StateVector& apply_phase(StateVector& sv, std::span<const double> cost,
                         double gamma);
StateVector& apply_phase(StateVector& sv, const QuboModel& cost, double gamma);
StateVector& apply_phase(StateVector& sv, const DiagonalCost& cost,
                         double gamma);

/// exp(-i * beta * X) on every qubit.
StateVector& apply_x_mixer(StateVector& sv, double beta);

struct RegisterPair {
  int first = 0;
  int second = 0;
  friend bool operator==(const RegisterPair&, const RegisterPair&) = default;
};

/// exp(-i * theta * S) where S swaps the contents of two registers.
StateVector& apply_partial_swap(StateVector& sv, const BinaryLayout& layout,
                                RegisterPair pair, double theta);

/// Ordered rounds of register pairs. One hard-mixer layer applies every round
/// in order at a shared angle.
struct MixerSchedule {
  std::vector<std::vector<RegisterPair>> rounds;

  /// Round A: (0,1),(2,3),...  Round B: (1,2),(3,4),...
  static MixerSchedule odd_even(int registers);
  std::vector<RegisterPair> pairs() const;
};

StateVector& apply_hard_mixer(StateVector& sv, const BinaryLayout& layout,
                              double theta, const MixerSchedule& schedule);

double expectation(const StateVector& sv, std::span<const double> cost);
double expectation(const StateVector& sv, const QuboModel& cost);
double expectation(const StateVector& sv, const DiagonalCost& cost);

/// Seeded multinomial draw from |a_x|^2; returns index -> count.
std::map<std::uint64_t, std::uint64_t> sample(const StateVector& sv,
                                              std::uint64_t shots,
                                              std::uint64_t seed);

/// Probability mass on indices where mask[x] == 0.
double leakage(const StateVector& sv, std::span<const char> feasible_mask);
double leakage(const StateVector& sv, const Layout& layout);

/// Text lines `index re im` for every |a|^2 > 1e-12, sorted by index.
void dump_state(const StateVector& sv, std::ostream& os);

}  // namespace qroute
