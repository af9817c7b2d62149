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

#include <stdexcept>
#include <string>

namespace qroute {

/// Raised when a request is well-formed but exceeds a size guard or violates
/// a configuration invariant. Callers map this to a refusal rather than an
/// ordinary failure.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default ceiling on dense 2^q allocations (amplitudes and cost tables).
inline constexpr int kMaxQubits = 26;

}  // namespace qroute
