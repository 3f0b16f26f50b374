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

#include "reppack/generate.hpp"
#include "reppack/kernel.hpp"
#include "reppack/oracle.hpp"
#include "reppack/wdm.hpp"
#include "reppack/wsp.hpp"
#include "support.hpp"

using namespace reppack;

namespace {

std::optional<Weight> weight(const std::optional<Solution>& s) {
  if (!s) return std::nullopt;
  return s->total_weight;
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("bound") {
    CHECK(kernel_bound(3, 2) == 20);
    CHECK(kernel_bound(3, 3) == 84);
  }

  TEST_CASE("small instances are unchanged") {
    const Instance inst = parse_instance("WDM 3 2\nT a x m 1\nT b y n 2\nT c z o 3\n");
    const KernelResult kr = kernelize(inst);
    CHECK(kr.kernel == inst);
    CHECK(kr.member_map == std::vector<MemberIndex>{0, 1, 2});
  }

  TEST_CASE("matching kernel size and optimum") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto spec = testing::spec_of(seed, ProblemKind::wdm, 3, 2, {6, 6, 6}, -9, 9);
      const Instance inst = gen_random(spec, 100);
      const KernelResult kr = kernelize_wdm(inst);
      CHECK(kr.kernel.members.size() <= 20);
      CHECK(kr.kernel.universe_size() <= 3 * kr.kernel.members.size());
      CHECK(validate(kr.kernel).empty());
      CHECK(weight(brute_force_solve(kr.kernel)) == weight(brute_force_solve(inst)));
    }
  }

  TEST_CASE("packing kernel size and optimum") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto spec = testing::spec_of(seed, ProblemKind::wsp, 3, 3, {20}, -9, 9);
      const Instance inst = gen_random(spec, 500);
      const KernelResult kr = kernelize_wsp(inst);
      CHECK(kr.kernel.members.size() <= 84);
      CHECK(weight(solve_wsp(kr.kernel).solution) == weight(solve_wsp(inst).solution));
    }
  }

  TEST_CASE("maps point at identical members") {
    const auto spec = testing::spec_of(5, ProblemKind::wdm, 3, 2, {6, 6, 6}, -9, 9);
    const Instance inst = gen_random(spec, 100);
    const KernelResult kr = kernelize(inst);
    REQUIRE(kr.member_map.size() == kr.kernel.members.size());
    for (const auto& m : kr.kernel.members) {
      const auto& orig = inst.members[kr.member_map[m.index]];
      CHECK(orig.weight == m.weight);
      for (std::size_t j = 0; j < m.elements.size(); ++j) {
        CHECK(kr.element_map[m.elements[j]] == orig.elements[j]);
      }
    }
    const auto sol = solve_wdm(kr.kernel).solution;
    REQUIRE(sol);
    CHECK(is_feasible_solution(inst, lift_solution(kr, *sol)));
  }

  TEST_CASE("infeasible stays infeasible") {
    InstanceBuilder builder(ProblemKind::wsp, 3, 2);
    for (int a = 1; a <= 8; ++a) {
      for (int b = a + 1; b <= 8; ++b) {
        const std::string labels[] = {"hub", "e" + std::to_string(a), "e" + std::to_string(b)};
        builder.add_member(labels, a - b);
      }
    }
    const Instance inst = std::move(builder).build();
    REQUIRE(inst.members.size() == 28);
    const KernelResult kr = kernelize(inst);
    CHECK(kr.kernel.members.size() <= 20);
    CHECK_FALSE(brute_force_solve(kr.kernel));
  }

  TEST_CASE("second pass is the identity") {
    const auto spec = testing::spec_of(9, ProblemKind::wdm, 3, 2, {7, 7, 7}, -9, 9);
    const KernelResult once = kernelize(gen_random(spec, 150));
    const KernelResult twice = kernelize(once.kernel);
    CHECK(twice.kernel == once.kernel);
  }

  TEST_CASE("wrong kind") {
    CHECK_THROWS_AS(kernelize_wdm(parse_instance("WSP 2 1\nS a b 1\n")), InstanceError);
    CHECK_THROWS_AS(kernelize_wsp(parse_instance("WDM 2 1\nT a b 1\n")), InstanceError);
  }

  TEST_CASE("serialized kernel lists the maps") {
    const Instance inst = parse_instance("WDM 2 1\nT a x 1\n");
    const std::string text = serialize_kernel(kernelize(inst), inst);
    CHECK(text.find("# MAPM 0 0\n") != std::string::npos);
    CHECK(text.find("# MAPE 1 x\n") != std::string::npos);
    CHECK(parse_instance(text) == inst);
  }
}
