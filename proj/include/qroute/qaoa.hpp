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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qroute/encoding.hpp"
#include "qroute/engine.hpp"
#include "qroute/model.hpp"
#include "qroute/oracle.hpp"
#include "qroute/qubo.hpp"

namespace qroute {

enum class MixerKind { SoftX, HardSwap };
enum class InitKind { Plus, FeasibleUniform, FeasibleBasis };

struct InitialState {
  InitKind kind = InitKind::FeasibleUniform;
  std::uint64_t index = 0;  ///< basis index for FeasibleBasis
};

struct OptimizerSettings {
  int max_evaluations = 600;  ///< per restart
  double tolerance = 1e-6;
  int restarts = 4;
  std::uint64_t seed = 0;
  int grid = 24;  ///< p = 1 pre-scan resolution per angle
};

/// Two-qubit cost of one register partial swap is slope*m + intercept for
/// m-bit registers. Binary cost unitaries are counted exactly from their
/// Walsh spectrum up to `exact_cost_qubits`, n^3 beyond.
struct GateModel {
  double swap_slope = 6.0;
  double swap_intercept = -3.0;
  int exact_cost_qubits = 20;
};

struct QaoaConfig {
  EncodingKind encoding = EncodingKind::Binary;
  MixerKind mixer = MixerKind::HardSwap;
  int depth = 1;
  InitialState init;
  OptimizerSettings optimizer;
  std::uint64_t shots = 1024;
  /// Replaces penalty_weight() in one-hot models.
  std::optional<double> penalty;
  GateModel gates;
  int max_qubits = kMaxQubits;

  static QaoaConfig binary_hard(int depth = 1);
  static QaoaConfig onehot_soft(int depth = 1);

  /// Throws GuardError on invariant violations.
  void validate() const;
};

struct GateCount {
  long long two_qubit = 0;
  long long one_qubit = 0;
  friend bool operator==(const GateCount&, const GateCount&) = default;
};

struct QaoaResult {
  std::vector<double> gammas;
  std::vector<double> thetas;
  double objective = 0.0;
  std::vector<double> trace;
  int evaluations = 0;

  StateVector final_state;
  double final_leakage = 0.0;
  double max_leakage = 0.0;  ///< over every objective evaluation

  std::optional<double> p_opt;
  std::optional<double> optimal_value;

  Solution best;
  BitString best_bits;
  std::map<std::uint64_t, std::uint64_t> samples;

  GateCount gates;
  int qubits = 0;
  std::uint64_t feasible_states = 0;
};

/// Prepared problem data for repeated ansatz evaluation.
class Ansatz {
 public:
  Ansatz(const QaoaConfig& config, const CvrpInstance& instance);

  const Layout& layout() const { return layout_; }
  std::span<const double> cost() const { return cost_; }
  std::span<const char> feasible_mask() const { return mask_; }
  const MixerSchedule& schedule() const { return schedule_; }
  int depth() const { return config_.depth; }

  StateVector initial_state() const;
  /// params = (gamma_1..gamma_p, theta_1..theta_p).
  StateVector run(std::span<const double> params) const;

 private:
  QaoaConfig config_;
  Layout layout_;
  std::vector<double> cost_;
  std::vector<char> mask_;
  MixerSchedule schedule_;
};

Layout layout_for(EncodingKind encoding, const CvrpInstance& instance);

StateVector run_ansatz(const QaoaConfig& config, const CvrpInstance& instance,
                       std::span<const double> params);

QaoaResult optimize(const QaoaConfig& config, const CvrpInstance& instance);

/// Probability of measuring any basis state that decodes to an optimum.
double circuit_performance(const StateVector& state,
                           const RoutingOptimum& oracle, const Layout& layout);

GateCount gate_count(const QaoaConfig& config, const CvrpInstance& instance);

/// p_ideal * (1-eps)^G + (1 - (1-eps)^G) / D.
double modeled_success(double p_ideal, long long two_qubit_gates,
                       double epsilon, double outcome_space);

/// Outcome-space size used by modeled_success: feasible states for hard-mixer
/// runs, 2^q otherwise.
double outcome_space(const QaoaConfig& config, const QaoaResult& result);

struct ClusterReport {
  std::vector<int> nodes;
  Route route;
  double cost = 0.0;
  std::optional<double> oracle_value;
  bool optimal = false;
  std::optional<double> p_opt;
  int evaluations = 0;
};

struct ClusterFirstResult {
  Solution solution;
  std::vector<ClusterReport> clusters;
};

ClusterFirstResult solve_cvrp_cluster_first(const CvrpInstance& instance,
                                            const QaoaConfig& config);

}  // namespace qroute
