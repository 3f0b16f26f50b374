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

#include <algorithm>
#include <numeric>
#include <random>

#include "reppack/generate.hpp"
#include "reppack/oracle.hpp"
#include "support.hpp"

using namespace reppack;

TEST_SUITE("oracle") {
  TEST_CASE("p = 1 picks the heaviest member") {
    const Instance inst = parse_instance("WDM 2 1\nT a x 3\nT b y 9\nT a y 9\n");
    const auto best = brute_force_solve(inst);
    REQUIRE(best);
    CHECK(best->picked == std::vector<MemberIndex>{1});
    CHECK(best->total_weight == 9);
  }

  TEST_CASE("two disjoint pairs") {
    const Instance inst =
        parse_instance("WDM 2 2\nT a x 5\nT b y 1\nT a y 3\nT b x 4\n");
    const auto best = brute_force_solve(inst);
    REQUIRE(best);
    CHECK(best->total_weight == 7);
    CHECK(best->picked == std::vector<MemberIndex>{2, 3});
  }

  TEST_CASE("reject when no p disjoint members exist") {
    CHECK_FALSE(brute_force_solve(parse_instance("WSP 2 2\nS a b 1\nS b c 1\nS a c 1\n")));
    CHECK_FALSE(brute_force_solve(parse_instance("WDM 2 3\nT a x 1\nT b y 1\n")));
  }

  TEST_CASE("budget is enforced") {
    const auto spec = testing::spec_of(3, ProblemKind::wdm, 2, 3, {40, 40}, 1, 5);
    CHECK_THROWS_AS(brute_force_solve(gen_random(spec, 400), OracleBudget{1000}), BudgetExceeded);
  }

  TEST_CASE("planted weight is a lower bound") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto spec = testing::spec_of(seed, ProblemKind::wsp, 3, 2, {9}, -4, 6);
      const PlantedInstance planted = gen_planted(spec, 12);
      const auto best = brute_force_solve(planted.instance);
      REQUIRE(best);
      CHECK(best->total_weight >= planted.planted_weight);
    }
  }

  TEST_CASE("optimum is invariant under member permutation") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto spec = testing::spec_of(seed, ProblemKind::wdm, 3, 2, {4, 4, 4}, -9, 9);
      const Instance inst = gen_random(spec, 14);
      std::vector<std::size_t> order(inst.members.size());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      InstanceBuilder builder(inst.kind, inst.q, inst.p);
      for (std::size_t k : order) {
        std::vector<std::string> labels;
        for (ElementId e : inst.members[k].elements) labels.push_back(inst.elements[e].label);
        builder.add_member(labels, inst.members[k].weight);
      }
      const auto a = brute_force_solve(inst);
      const auto b = brute_force_solve(std::move(builder).build());
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(a->total_weight == b->total_weight);
    }
  }

  TEST_CASE("representation check: reflexive") {
    const std::vector<Triple> family = {{{0, 1}, {}, 3}, {{1, 2}, {}, 5}, {{0, 3}, {}, -1}};
    CHECK_FALSE(check_representation(4, 2, 2, family, family));
  }

  TEST_CASE("representation check: empty subfamily fails on the empty set") {
    const std::vector<Triple> family = {{{0}, {}, 3}};
    const auto bad = check_representation(2, 1, 1, family, {});
    REQUIRE(bad);
    CHECK(bad->y.empty());
    CHECK(bad->unserved == 0);
  }

  TEST_CASE("representation check: one spare element") {
    const std::vector<Triple> family = {{{0}, {}, 3}, {{1}, {}, 2}, {{2}, {}, 1}};
    CHECK_FALSE(check_representation(3, 1, 1, family, std::vector<Triple>{family[0], family[1]}));
    const auto bad = check_representation(3, 1, 1, family, std::vector<Triple>{family[0], family[2]});
    REQUIRE(bad);
    CHECK(bad->y == ElementSet{0});
    CHECK(bad->unserved == 1);
  }

  TEST_CASE("representation check: lighter substitute is not enough") {
    const std::vector<Triple> family = {{{0}, {}, 3}, {{0}, {}, 1}};
    CHECK(check_representation(1, 1, 0, family, std::vector<Triple>{family[1]}));
  }
}
