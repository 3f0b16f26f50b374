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

#include "reppack/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "reppack/repset.hpp"

namespace reppack {
namespace {

KernelResult unchanged(const Instance& inst) {
  KernelResult out{inst, {}, {}};
  out.member_map.resize(inst.members.size());
  std::iota(out.member_map.begin(), out.member_map.end(), MemberIndex{0});
  out.element_map.resize(inst.universe_size());
  std::iota(out.element_map.begin(), out.element_map.end(), ElementId{0});
  return out;
}

KernelResult reduce(const Instance& inst) {
  require_valid(inst);
  if (inst.members.size() <= kernel_bound(inst.q, inst.p)) return unchanged(inst);

  std::vector<Triple> family;
  family.reserve(inst.members.size());
  for (const auto& m : inst.members) {
    Triple t;
    t.x = m.elements;
    std::sort(t.x.begin(), t.x.end());
    t.payload.members = {m.index};
    t.weight = m.weight;
    family.push_back(std::move(t));
  }
  const auto kept =
      representative_positions({inst.universe_size(), inst.q, inst.q * (inst.p - 1)}, family);

  // Rebuilding through the builder drops unused elements and re-interns
  // ids in first-appearance order.
  InstanceBuilder builder(inst.kind, inst.q, inst.p);
  KernelResult out;
  std::vector<std::string> labels(inst.q);
  for (std::size_t pos : kept) {
    const auto& m = inst.members[pos];
    for (int j = 0; j < inst.q; ++j) labels[j] = inst.elements[m.elements[j]].label;
    builder.add_member(labels, m.weight);
    out.member_map.push_back(m.index);
  }
  out.kernel = std::move(builder).build();
  // Labels are unique, so they identify the original ids.
  std::unordered_map<std::string_view, ElementId> by_label;
  for (const auto& e : inst.elements) by_label.emplace(e.label, e.id);
  for (const auto& e : out.kernel.elements) out.element_map.push_back(by_label.at(e.label));
  return out;
}

}  // namespace

std::uint64_t kernel_bound(int q, int p) { return binomial(static_cast<std::uint64_t>(q) * p, q); }

KernelResult kernelize_wdm(const Instance& inst) {
  if (inst.kind != ProblemKind::wdm) throw InstanceError("expected a WDM instance");
  return reduce(inst);
}

KernelResult kernelize_wsp(const Instance& inst) {
  if (inst.kind != ProblemKind::wsp) throw InstanceError("expected a WSP instance");
  return reduce(inst);
}

KernelResult kernelize(const Instance& inst) {
  return inst.kind == ProblemKind::wdm ? kernelize_wdm(inst) : kernelize_wsp(inst);
}

Solution lift_solution(const KernelResult& result, const Solution& kernel_solution) {
  Solution out{{}, kernel_solution.total_weight};
  for (MemberIndex k : kernel_solution.picked) out.picked.push_back(result.member_map.at(k));
  std::sort(out.picked.begin(), out.picked.end());
  return out;
}

std::string serialize_kernel(const KernelResult& result, const Instance& original) {
  std::ostringstream out;
  out << serialize_instance(result.kernel);
  for (std::size_t k = 0; k < result.member_map.size(); ++k) {
    out << "# MAPM " << k << ' ' << result.member_map[k] << '\n';
  }
  for (std::size_t k = 0; k < result.element_map.size(); ++k) {
    out << "# MAPE " << k << ' ' << original.elements.at(result.element_map[k]).label << '\n';
  }
  return out.str();
}

}  // namespace reppack
