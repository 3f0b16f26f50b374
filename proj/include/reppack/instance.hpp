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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reppack {

using ElementId = std::uint32_t;
using MemberIndex = std::uint32_t;
using Weight = std::int64_t;

// Sorted strictly ascending list of element ids.
using ElementSet = std::vector<ElementId>;

enum class ProblemKind { wdm, wsp };

std::string_view to_string(ProblemKind kind);

struct ElementRef {
  ElementId id = 0;
  // 1..q for matching instances; empty for packing instances.
  std::optional<int> coord;
  std::string label;

  bool operator==(const ElementRef&) const = default;
};

// Matching members keep tuple order (element j lives in universe j).
// Packing members are stored sorted by id, so the j smallest elements
// form a prefix.
struct MemberRecord {
  MemberIndex index = 0;
  std::vector<ElementId> elements;
  Weight weight = 0;

  bool operator==(const MemberRecord&) const = default;
};

struct Instance {
  ProblemKind kind = ProblemKind::wdm;
  int q = 0;
  int p = 0;
  // Indexed by id. Ids follow first appearance in the input, which is
  // also the element order every solver iterates in.
  std::vector<ElementRef> elements;
  std::vector<MemberRecord> members;

  std::size_t universe_size() const { return elements.size(); }

  // Ascending ids of universe `coord` (1..q). Packing instances have a
  // single universe; pass coord = 0 to get all ids.
  std::vector<ElementId> universe(int coord) const;

  bool operator==(const Instance&) const = default;
};

struct Solution {
  std::vector<MemberIndex> picked;  // ascending
  Weight total_weight = 0;

  bool operator==(const Solution&) const = default;
};

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InstanceError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Interns element labels into dense ids while members are added.
class InstanceBuilder {
 public:
  InstanceBuilder(ProblemKind kind, int q, int p);

  // Labels are given in tuple order for matching instances. Throws
  // InstanceError on wrong arity, a label reused in another coordinate,
  // or a repeated element inside a packing set.
  MemberIndex add_member(std::span<const std::string> labels, Weight weight);

  Instance build() &&;

 private:
  ElementId intern(const std::string& label, std::optional<int> coord);

  Instance inst_;
  std::unordered_map<std::string, ElementId> ids_;
};

Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

// Empty result means the instance is valid.
std::vector<std::string> validate(const Instance& inst);

// Throws InstanceError listing the first violation.
void require_valid(const Instance& inst);

// Matching instance with tuples read as plain sets.
Instance as_packing(const Instance& inst);

// True when the picked members are p distinct, pairwise disjoint members
// whose weights sum to total_weight.
bool is_feasible_solution(const Instance& inst, const Solution& sol);

Weight solution_weight(const Instance& inst, std::span<const MemberIndex> picked);

// "WEIGHT <w>" plus one "PICK <i>" per member, or "REJECT".
std::string format_solution(const std::optional<Solution>& sol);

}  // namespace reppack
