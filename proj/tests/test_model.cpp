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

#include <random>

#include "doctest.h"
#include "qroute/model.hpp"
#include "test_support.hpp"

using namespace qroute;

TEST_CASE("load_instance reads an explicit matrix") {
  const auto inst = load_instance(R"({"name":"t","n":2,"vehicles":1,"capacity":2,
      "matrix":[[0,1,4],[2,0,1],[1,3,0]]})");
  CHECK(inst.n == 2);
  CHECK(inst.is_tsp());
  CHECK(inst.cost == testing::tsp2().cost);
}

TEST_CASE("load_instance rejects bad documents") {
  CHECK_THROWS_WITH_AS(load_instance(R"({"name":"t","n":2,"vehicles":1,"capacity":1,
      "matrix":[[0,1,4],[2,0,1],[1,3,0]]})"),
                       doctest::Contains("V*C < n"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(load_instance(R"({"name":"t","n":1,"vehicles":1,"capacity":1,
      "matrix":[[0,1],[1,5]]})"),
                       doctest::Contains("nonzero diagonal"), std::invalid_argument);
  CHECK_THROWS_AS(load_instance("{not json"), std::invalid_argument);
  CHECK_THROWS_AS(load_instance(R"({"name":"t","n":1,"vehicles":1,"capacity":1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_instance(R"({"name":"t","n":1,"vehicles":1,"capacity":1,
      "matrix":[[0,1],[1,0]],"extra":3})"),
                  std::invalid_argument);
  CHECK_THROWS_WITH(make_tsp("neg", {{0, -1}, {1, 0}}), doctest::Contains("negative"));
}

TEST_CASE("coordinates become rounded Euclidean costs") {
  const auto inst = load_instance(R"({"name":"c","n":2,"vehicles":1,"capacity":2,
      "coords":[[0,0],[3,4],[1,1]]})");
  CHECK(inst.cost[0][1] == 5.0);
  CHECK(inst.cost[0][2] == 1.414214);
  CHECK(inst.cost[1][0] == inst.cost[0][1]);
}

TEST_CASE("route_cost") {
  const auto inst = testing::tsp2();
  CHECK(route_cost(inst, {1, 2}) == 3.0);
  CHECK(route_cost(inst, {2, 1}) == 9.0);
  CHECK(route_cost(inst, {}) == 0.0);
  CHECK_THROWS(route_cost(inst, {1, 1}));
  CHECK_THROWS(route_cost(inst, {3}));
}

TEST_CASE("solution_cost") {
  const auto inst = make_instance("pair", {{0, 1, 1}, {1, 0, 5}, {1, 5, 0}}, 2, 1);
  CHECK(solution_cost(inst, {{{1}, {2}}}) == 4.0);
  CHECK_THROWS_WITH(solution_cost(make_instance("p", {{0, 1, 1}, {1, 0, 5}, {1, 5, 0}}, 2, 2),
                                  {{{1, 2}, {1}}}),
                    doctest::Contains("duplicated node"));
  CHECK_THROWS_WITH(solution_cost(inst, {{{1}, {}}}), doctest::Contains("missing node"));
  CHECK_THROWS(solution_cost(inst, {{{1, 2}, {}}}));
  const auto empty = make_instance("empty", {{0}}, 1, 1);
  CHECK(solution_cost(empty, {{{}}}) == 0.0);
}

TEST_CASE("cluster_nodes follows the greedy seeding rule") {
  SUBCASE("forced by capacity") {
    const auto inst = make_instance("p", {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}}, 2, 1);
    const auto c = cluster_nodes(inst);
    REQUIRE(c.size() == 2);
    CHECK(c[0].size() == 1);
    CHECK(c[1].size() == 1);
  }
  SUBCASE("two separated groups") {
    const auto c = cluster_nodes(testing::cvrp4());
    REQUIRE(c.size() == 2);
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  }
  SUBCASE("tight capacity fills every cluster") {
    const auto inst = generate_instance(5, 6, 3, 2, 10.0);
    for (const auto& cluster : cluster_nodes(inst)) CHECK(cluster.size() == 2);
  }
}

TEST_CASE("generate_instance is seeded") {
  const auto a = generate_instance(7, 3, 1, 3, 10.0);
  const auto b = generate_instance(7, 3, 1, 3, 10.0);
  const auto c = generate_instance(8, 3, 1, 3, 10.0);
  CHECK(a.cost == b.cost);
  CHECK(a.cost != c.cost);
  const auto one = generate_instance(1, 1, 1, 1, 10.0);
  REQUIRE(one.cost.size() == 2);
  CHECK(one.cost[0][1] == one.cost[1][0]);
}

TEST_CASE("property: reversal symmetry on Euclidean instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const auto inst = generate_instance(seed, n, 1, n, 50.0);
    Route r(n);
    std::iota(r.begin(), r.end(), 1);
    std::mt19937_64 rng(seed);
    std::shuffle(r.begin(), r.end(), rng);
    Route rev(r.rbegin(), r.rend());
    CHECK(route_cost(inst, r) == doctest::Approx(route_cost(inst, rev)).epsilon(1e-12));
  }
}

TEST_CASE("property: solution_cost is the sum of route costs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = generate_instance(seed, 6, 3, 2, 10.0);
    const auto clusters = cluster_nodes(inst);
    Solution s;
    double total = 0.0;
    for (const auto& c : clusters) {
      s.routes.push_back(c);
      total += route_cost(inst, c);
    }
    CHECK(solution_cost(inst, s) == total);
  }
}

TEST_CASE("property: cluster_nodes is a capacity-respecting partition") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int V = 1 + static_cast<int>(rng() % 4);
    const int C = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % (V * C));
    const auto inst = generate_instance(rng(), n, V, C, 10.0);
    const auto clusters = cluster_nodes(inst);
    REQUIRE(static_cast<int>(clusters.size()) == V);
    std::vector<int> seen(n + 1, 0);
    for (const auto& c : clusters) {
      CHECK(static_cast<int>(c.size()) <= C);
      for (int u : c) {
        REQUIRE(u >= 1);
        REQUIRE(u <= n);
        ++seen[u];
      }
    }
    for (int u = 1; u <= n; ++u) CHECK(seen[u] == 1);
  }
}

TEST_CASE("property: save then load round-trips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = generate_instance(seed, 5, 2, 3, 10.0);
    const std::string text = save_instance(inst);
    const auto back = load_instance(text);
    CHECK(back.cost == inst.cost);
    CHECK(save_instance(back) == text);
  }
  const auto m = testing::tsp3();
  CHECK(save_instance(load_instance(save_instance(m))) == save_instance(m));
}

TEST_CASE("sub_instance keeps depot legs") {
  const auto inst = testing::cvrp4();
  const std::vector<int> nodes = {3, 4};
  const auto sub = sub_instance(inst, nodes);
  CHECK(sub.n == 2);
  CHECK(sub.is_tsp());
  CHECK(sub.cost[0][1] == inst.cost[0][3]);
  CHECK(sub.cost[1][2] == inst.cost[3][4]);
}
