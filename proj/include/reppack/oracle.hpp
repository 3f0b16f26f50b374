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

// Naive reference instruments. Nothing here touches the field machinery.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "reppack/instance.hpp"
#include "reppack/repset.hpp"

namespace reppack {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  std::uint64_t max_combinations = 50'000'000;
};

// Enumerates all p-subsets of members in lexicographic index order and
// returns the first disjoint one of maximum weight. Throws BudgetExceeded
// when C(|S|, p) exceeds the budget.
std::optional<Solution> brute_force_solve(const Instance& inst, OracleBudget budget = {});

struct RepresentationCounterexample {
  ElementSet y;
  std::size_t unserved = 0;  // position in the full family
};

// Exhaustive test of the max r-representation property: every Y with
// |Y| <= r avoided by some triple of `family` must be avoided by a triple
// of `subfamily` of at least the same weight. Only elements occurring in
// family X-sets are enumerated for Y; other elements meet no X. Returns
// the first failing Y, or nothing on success.
std::optional<RepresentationCounterexample> check_representation(
    std::size_t universe_size, int s, int r, std::span<const Triple> family,
    std::span<const Triple> subfamily, OracleBudget budget = {});

}  // namespace reppack
