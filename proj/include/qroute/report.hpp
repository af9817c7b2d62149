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

#include <string>

#include "json.hpp"
#include "qroute/model.hpp"
#include "qroute/oracle.hpp"
#include "qroute/qaoa.hpp"

namespace qroute {

/// Rounds to 12 significant digits.
double round_sig12(double v);

/// Applies round_sig12 to every floating-point number in the document.
void round_numbers(nlohmann::json& doc);

/// Pretty-printed report text with numbers at 12 significant digits.
std::string render_report(nlohmann::json doc);

std::string encoding_name(EncodingKind kind);
std::string mixer_name(MixerKind kind);
std::string init_name(InitKind kind);

nlohmann::json routes_json(const Solution& solution);
nlohmann::json config_json(const QaoaConfig& config);
nlohmann::json result_json(const QaoaResult& result);
nlohmann::json oracle_json(const RoutingOptimum& oracle);
nlohmann::json cluster_json(const ClusterFirstResult& result);

}  // namespace qroute
