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
#include "reppack/instance.hpp"
#include "support.hpp"

using namespace reppack;

TEST_SUITE("support") {
  TEST_CASE("disjoint subsets") {
    const Instance inst = parse_instance("WDM 2 2\nT a x 1\nT b y 1\nT a y 1\nT c z 1\n");
    const auto pairs = testing::disjoint_subsets(inst, {0, 1, 2, 3}, 2);
    CHECK(pairs == std::vector<PartialSolution>{{0, 1}, {0, 3}, {1, 3}, {2, 3}});
  }

  TEST_CASE("anchored members") {
    const Instance inst = parse_instance("WDM 2 2\nT a x 1\nT b y 1\nT a y 1\n");
    const auto anchors = inst.universe(1);
    CHECK(testing::anchored_up_to(inst, anchors, anchors[0], 0) == std::vector<MemberIndex>{0, 2});
    CHECK(testing::anchored_up_to(inst, anchors, anchors[1], 0).size() == 3);
  }
}
