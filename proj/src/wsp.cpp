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

#include "reppack/wsp.hpp"

#include "anchored_dp.hpp"

namespace reppack {
namespace {

void require_packing(const Instance& inst) {
  if (inst.kind != ProblemKind::wsp) throw InstanceError("expected a WSP instance");
  require_valid(inst);
}

}  // namespace

Triple wsp_triple(const Instance& inst, const PartialSolution& partial) {
  require_packing(inst);
  return detail::partial_triple(detail::packing_layout(inst), partial);
}

std::vector<Triple> wsp_add(const Instance& inst, int i, MemberIndex member,
                            std::span<const PartialSolution> partials) {
  require_packing(inst);
  if (i < 2 || i > inst.p) throw std::invalid_argument("wsp_add needs 2 <= i <= p");
  return detail::add_member(detail::packing_layout(inst), i, member, partials);
}

SolveResult solve_wsp(const Instance& inst, const SolverOptions& options,
                      const CellObserver& observer) {
  require_packing(inst);
  return detail::run_anchored_dp(detail::packing_layout(inst), options, observer);
}

}  // namespace reppack
