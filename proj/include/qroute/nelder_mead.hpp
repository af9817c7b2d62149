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

#include <functional>
#include <span>
#include <vector>

namespace qroute {

struct SimplexOptions {
  int max_evaluations = 400;
  /// Stop once the spread of objective values across the simplex falls below
  /// this.
  double tolerance = 1e-6;
  double initial_step = 0.4;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  /// Best value after each iteration (non-increasing).
  std::vector<double> trace;
};

using Objective = std::function<double(std::span<const double>)>;

/// Downhill simplex (Nelder-Mead) with the standard reflection, expansion,
/// contraction and shrink coefficients (1, 2, 1/2, 1/2).
SimplexResult nelder_mead(const Objective& f, std::vector<double> start,
                          const SimplexOptions& options);

}  // namespace qroute
