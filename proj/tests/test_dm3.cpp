// Copyright 2026 The reppack Authors.
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


#include <doctest.h>

#include "reppack/dm3.hpp"
#include "reppack/generate.hpp"
#include "reppack/oracle.hpp"
#include "reppack/wdm.hpp"
#include "support.hpp"

using namespace reppack;

TEST_SUITE("solver-dm3") {
  TEST_CASE("p = 1 returns the first tuple") {
    const Instance inst =
        parse_instance("WDM 3 1\nT a x m 2\nT b y n 2\nT a y m 2\nT c z o 2\n");
    const auto res = solve_dm3(inst);
    REQUIRE(res.solution);
    CHECK(res.solution->picked == std::vector<MemberIndex>{0});
    CHECK(res.solution->total_weight == 2);
  }

  TEST_CASE("weight is p times the common weight") {
    const Instance inst = parse_instance("WDM 3 2\nT a x m 3\nT b y n 3\nT a y m 3\n");
    const auto res = solve_dm3(inst);
    REQUIRE(res.solution);
    CHECK(res.solution->total_weight == 6);
    CHECK(is_feasible_solution(inst, *res.solution));
  }

  TEST_CASE("empty or infeasible instances reject") {
    CHECK_FALSE(solve_dm3(parse_instance("WDM 3 2\nT a x m 1\nT a y n 1\n")).solution);
    CHECK_FALSE(solve_dm3(parse_instance("WDM 3 3\nT a x m 1\nT b y n 1\n")).solution);
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(solve_dm3(parse_instance("WDM 2 1\nT a x 1\n")), InstanceError);
    CHECK_THROWS_AS(solve_dm3(parse_instance("WSP 3 1\nS a b c 1\n")), InstanceError);
    CHECK_THROWS_AS(solve_dm3(parse_instance("WDM 3 1\nT a x m 1\nT b y n 2\n")), InstanceError);
  }

  TEST_CASE("planted matchings are found") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto spec = testing::spec_of(seed, ProblemKind::wdm, 3, 3, {5, 5, 5}, 1, 1);
      const Instance inst = gen_planted(spec, 10).instance;
      const auto res = solve_dm3(inst);
      REQUIRE(res.solution);
      CHECK(res.solution->picked.size() == 3);
      CHECK(is_feasible_solution(inst, *res.solution));
    }
  }

  TEST_CASE("verdict agrees with the weighted solver and the oracle") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const int p = 1 + static_cast<int>(seed % 3);
      const auto spec = testing::spec_of(seed, ProblemKind::wdm, 3, p, {p + 1, p + 1, p + 1}, 1, 1);
      const Instance inst = gen_random(spec, 2 + seed % 9);
      const auto res = solve_dm3(inst);
      const bool expect = brute_force_solve(inst).has_value();
      CHECK(res.solution.has_value() == expect);
      CHECK(solve_wdm(inst).solution.has_value() == expect);
      if (res.solution) CHECK(is_feasible_solution(inst, *res.solution));
    }
  }

  TEST_CASE("thread count does not change the answer") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto spec = testing::spec_of(seed, ProblemKind::wdm, 3, 4, {6, 6, 6}, 1, 1);
      const Instance inst = gen_random(spec, 18);
      const auto a = solve_dm3(inst, {1});
      const auto b = solve_dm3(inst, {3});
      CHECK(a.solution == b.solution);
      CHECK(a.stats.represent_calls == b.stats.represent_calls);
    }
  }

  TEST_CASE("cells represent their solution families") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const int p = 2 + static_cast<int>(seed % 2);
      const auto spec = testing::spec_of(seed, ProblemKind::wdm, 3, p, {4, 4, 4}, 1, 1);
      const Instance inst = gen_planted(spec, 8).instance;
      CHECK(testing::dm3_cell_failure(inst, &checked) == "");
    }
    CHECK(checked > 0);
  }
}
