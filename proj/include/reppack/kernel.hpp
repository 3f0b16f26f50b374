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

#include <cstdint>
#include <string>
#include <vector>

#include "reppack/instance.hpp"

namespace reppack {

struct KernelResult {
  Instance kernel;
  std::vector<MemberIndex> member_map;  // kernel member -> original member
  std::vector<ElementId> element_map;   // kernel element -> original element
};

// C(qp, q): the largest member count a kernel can have.
std::uint64_t kernel_bound(int q, int p);

// Keeps a q(p-1)-representative family of the tuples, keyed on all q
// elements. Returns the instance unchanged when |S| <= C(qp, q).
KernelResult kernelize_wdm(const Instance& inst);
KernelResult kernelize_wsp(const Instance& inst);

// Dispatches on inst.kind.
KernelResult kernelize(const Instance& inst);

// Maps a kernel solution back to original member indices.
Solution lift_solution(const KernelResult& result, const Solution& kernel_solution);

// Kernel in the instance text format, followed by "# MAPM <k> <orig>" and
// "# MAPE <k> <orig-label>" trailer lines.
std::string serialize_kernel(const KernelResult& result, const Instance& original);

}  // namespace reppack
