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

#include "reppack/wdm.hpp"

#include "anchored_dp.hpp"

namespace reppack {
namespace {

void require_matching(const Instance& inst) {
  if (inst.kind != ProblemKind::wdm) throw InstanceError("expected a WDM instance");
  require_valid(inst);
}

}  // namespace

Triple wdm_triple(const Instance& inst, const PartialSolution& partial) {
  require_matching(inst);
  return detail::partial_triple(detail::matching_layout(inst), partial);
}

std::vector<Triple> wdm_add(const Instance& inst, int i, MemberIndex member,
                            std::span<const PartialSolution> partials) {
  require_matching(inst);
  if (i < 2 || i > inst.p) throw std::invalid_argument("wdm_add needs 2 <= i <= p");
  return detail::add_member(detail::matching_layout(inst), i, member, partials);
}

SolveResult solve_wdm(const Instance& inst, const SolverOptions& options,
                      const CellObserver& observer) {
  require_matching(inst);
  return detail::run_anchored_dp(detail::matching_layout(inst), options, observer);
}

}  // namespace reppack
