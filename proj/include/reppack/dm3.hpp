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

#include <functional>
#include <span>
#include <vector>

#include "reppack/instance.hpp"
#include "reppack/solver.hpp"

namespace reppack {

// Largest p the unweighted 3-dimensional solver accepts from the CLI;
// the anchor pool has 2(p-1) elements and every subset of it is a cell.
inline constexpr int kDm3MaxP = 6;

// One finished cell M[u, i, P] of the search for a p-matching, run for
// coordinate t (1..3) and free-element budget r. `anchor_pool` is P_t:
// elements of the (p-1)-matching outside U_t. `pool_subset` is P.
struct Dm3CellView {
  int p = 0;
  int t = 0;
  int r = 0;
  ElementId u = 0;
  int i = 0;
  std::span<const ElementId> anchor_pool;
  std::span<const ElementId> pool_subset;
  std::span<const PartialSolution> cell;
};

using Dm3CellObserver = std::function<void(const Dm3CellView&)>;

// Unweighted 3-dimensional p-matching: grows a (p-1)-matching into a
// p-matching that reuses at least 2(p-1) of its elements. Requires q = 3
// and equal weights; throws InstanceError otherwise. The observer must
// only be combined with options.threads == 1.
SolveResult solve_dm3(const Instance& inst, const SolverOptions& options = {},
                      const Dm3CellObserver& observer = {});

}  // namespace reppack
