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

#pragma once

#include <span>
#include <vector>

#include "reppack/instance.hpp"
#include "reppack/solver.hpp"

namespace reppack {

// Triple of a partial matching: X joins every element except the first
// coordinate of each tuple.
Triple wdm_triple(const Instance& inst, const PartialSolution& partial);

// Extends each partial of M[u', i-1] by tuple `member` one coordinate at a
// time, shrinking to a representative family after every coordinate.
// The result (q-1)(p-i)-represents the i-tuple extensions by `member`.
std::vector<Triple> wdm_add(const Instance& inst, int i, MemberIndex member,
                            std::span<const PartialSolution> partials);

// Exact maximum-weight p-matching by the representative-family DP over
// the first universe in ascending id order.
SolveResult solve_wdm(const Instance& inst, const SolverOptions& options = {},
                      const CellObserver& observer = {});

}  // namespace reppack
