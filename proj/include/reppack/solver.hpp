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

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "reppack/instance.hpp"
#include "reppack/repset.hpp"

namespace reppack {

// Member indices of i pairwise disjoint members, in insertion order.
using PartialSolution = std::vector<MemberIndex>;

struct SolverOptions {
  // Worker threads for the independent inner loops. Results are merged in
  // a fixed order, so output does not depend on this value.
  int threads = 1;
};

struct SolveStats {
  std::size_t peak_cell_size = 0;
  std::size_t represent_calls = 0;
};

struct SolveResult {
  std::optional<Solution> solution;  // empty = reject
  SolveStats stats;
};

// Receives every finished DP cell M[u, i] of the weighted solvers.
using CellObserver =
    std::function<void(ElementId u, int i, std::span<const PartialSolution> cell)>;

}  // namespace reppack
