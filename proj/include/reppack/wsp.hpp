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

// Triple of a partial packing: X joins every element except the smallest
// one of each set.
Triple wsp_triple(const Instance& inst, const PartialSolution& partial);

// Packing counterpart of wdm_add. Partials already holding the smallest
// element of `member` are dropped up front, and radii grow by one per
// missing set (q(p-i) instead of (q-1)(p-i)).
std::vector<Triple> wsp_add(const Instance& inst, int i, MemberIndex member,
                            std::span<const PartialSolution> partials);

// Exact maximum-weight p-packing, sweeping the universe in ascending id
// order and anchoring every set at its smallest element.
SolveResult solve_wsp(const Instance& inst, const SolverOptions& options = {},
                      const CellObserver& observer = {});

}  // namespace reppack
