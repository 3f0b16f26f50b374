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

// DP shared by the weighted matching and packing solvers. Every member is
// anchored at its first stored element (first coordinate of a tuple, or
// smallest element of a set). Anchors are swept in ascending order; X of
// a partial solution holds all non-anchor elements.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "reppack/instance.hpp"
#include "reppack/solver.hpp"

namespace reppack::detail {

struct AnchoredLayout {
  const Instance* inst = nullptr;
  // Representation radius per still-missing member. A later tuple meets X
  // only in its q-1 non-anchor coordinates; a later set can meet X in all
  // q elements, its anchor included.
  int radius_per_member = 0;
  // Packings must reject partials that already contain the new anchor.
  bool check_anchor = false;
  std::vector<ElementId> anchors;
  std::vector<std::vector<MemberIndex>> by_anchor;  // parallel to anchors
};

AnchoredLayout matching_layout(const Instance& inst);
AnchoredLayout packing_layout(const Instance& inst);

Triple partial_triple(const AnchoredLayout& layout, const PartialSolution& partial);

std::vector<Triple> add_member(const AnchoredLayout& layout, int i, MemberIndex member,
                               std::span<const PartialSolution> partials,
                               std::size_t* represent_calls = nullptr);

SolveResult run_anchored_dp(const AnchoredLayout& layout, const SolverOptions& options,
                            const CellObserver& observer);

}  // namespace reppack::detail
