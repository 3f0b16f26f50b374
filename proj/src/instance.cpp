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

#include "reppack/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace reppack {

std::string_view to_string(ProblemKind kind) {
  return kind == ProblemKind::wdm ? "WDM" : "WSP";
}

std::vector<ElementId> Instance::universe(int coord) const {
  std::vector<ElementId> ids;
  for (const auto& e : elements) {
    if (coord == 0 || e.coord == coord) ids.push_back(e.id);
  }
  return ids;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : InstanceError("line " + std::to_string(line) + ": " + what), line_(line) {}

InstanceBuilder::InstanceBuilder(ProblemKind kind, int q, int p) {
  if (q < 2) throw InstanceError("q must be at least 2");
  if (p < 1) throw InstanceError("p must be at least 1");
  inst_.kind = kind;
  inst_.q = q;
  inst_.p = p;
}

ElementId InstanceBuilder::intern(const std::string& label, std::optional<int> coord) {
  auto [it, inserted] = ids_.try_emplace(label, static_cast<ElementId>(inst_.elements.size()));
  if (inserted) {
    inst_.elements.push_back({it->second, coord, label});
  } else if (inst_.elements[it->second].coord != coord) {
    throw InstanceError("element '" + label + "' appears in coordinates " +
                        std::to_string(*inst_.elements[it->second].coord) + " and " +
                        std::to_string(*coord));
  }
  return it->second;
}

MemberIndex InstanceBuilder::add_member(std::span<const std::string> labels, Weight weight) {
  if (static_cast<int>(labels.size()) != inst_.q) {
    throw InstanceError("expected " + std::to_string(inst_.q) + " elements, got " +
                        std::to_string(labels.size()));
  }
  const bool matching = inst_.kind == ProblemKind::wdm;
  if (!matching) {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw InstanceError("duplicate element '" + l + "' in set");
    }
  }
  MemberRecord rec;
  rec.index = static_cast<MemberIndex>(inst_.members.size());
  rec.weight = weight;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    rec.elements.push_back(
        intern(labels[j], matching ? std::optional<int>(static_cast<int>(j) + 1) : std::nullopt));
  }
  if (!matching) std::sort(rec.elements.begin(), rec.elements.end());
  inst_.members.push_back(std::move(rec));
  return inst_.members.back().index;
}

Instance InstanceBuilder::build() && { return std::move(inst_); }

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, std::int64_t& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::optional<InstanceBuilder> builder;
  char tag = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (!builder) {
      if (toks.size() != 3 || (toks[0] != "WDM" && toks[0] != "WSP")) {
        throw ParseError(lineno, "expected header 'WDM <q> <p>' or 'WSP <q> <p>'");
      }
      std::int64_t q = 0, p = 0;
      if (!parse_int(toks[1], q) || !parse_int(toks[2], p) || q > 64 || p > 1'000'000) {
        throw ParseError(lineno, "malformed q or p");
      }
      const bool matching = toks[0] == "WDM";
      tag = matching ? 'T' : 'S';
      try {
        builder.emplace(matching ? ProblemKind::wdm : ProblemKind::wsp, static_cast<int>(q),
                        static_cast<int>(p));
      } catch (const InstanceError& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }
    if (toks[0].size() != 1 || toks[0][0] != tag) {
      throw ParseError(lineno, std::string("expected member line starting with '") + tag + "'");
    }
    if (toks.size() < 2) throw ParseError(lineno, "missing weight");
    std::int64_t w = 0;
    if (!parse_int(toks.back(), w)) throw ParseError(lineno, "malformed weight");
    std::vector<std::string> labels(toks.begin() + 1, toks.end() - 1);
    try {
      builder->add_member(labels, w);
    } catch (const InstanceError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!builder) throw ParseError(lineno, "missing header");
  return std::move(*builder).build();
}

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << to_string(inst.kind) << ' ' << inst.q << ' ' << inst.p << '\n';
  const char tag = inst.kind == ProblemKind::wdm ? 'T' : 'S';
  for (const auto& m : inst.members) {
    out << tag;
    for (ElementId e : m.elements) out << ' ' << inst.elements.at(e).label;
    out << ' ' << m.weight << '\n';
  }
  return out.str();
}

std::vector<std::string> validate(const Instance& inst) {
  std::vector<std::string> bad;
  const bool matching = inst.kind == ProblemKind::wdm;
  if (inst.q < 2) bad.push_back("q < 2");
  if (inst.p < 1) bad.push_back("p < 1");

  std::unordered_set<std::string_view> labels;
  for (std::size_t id = 0; id < inst.elements.size(); ++id) {
    const auto& e = inst.elements[id];
    if (e.id != id) bad.push_back("element " + std::to_string(id) + " has id " + std::to_string(e.id));
    if (!labels.insert(e.label).second) bad.push_back("label '" + e.label + "' is not unique");
    if (matching && (!e.coord || *e.coord < 1 || *e.coord > inst.q)) {
      bad.push_back("element '" + e.label + "' has no valid coordinate");
    }
    if (!matching && e.coord) bad.push_back("packing element '" + e.label + "' has a coordinate");
  }

  std::vector<bool> used(inst.elements.size(), false);
  for (std::size_t k = 0; k < inst.members.size(); ++k) {
    const auto& m = inst.members[k];
    const std::string name = "member " + std::to_string(k);
    if (m.index != k) bad.push_back(name + " has index " + std::to_string(m.index));
    if (static_cast<int>(m.elements.size()) != inst.q) {
      bad.push_back(name + " has " + std::to_string(m.elements.size()) + " elements");
      continue;
    }
    bool in_range = true;
    for (ElementId e : m.elements) {
      if (e >= inst.elements.size()) in_range = false;
      else used[e] = true;
    }
    if (!in_range) {
      bad.push_back(name + " references an unknown element");
      continue;
    }
    if (matching) {
      for (std::size_t j = 0; j < m.elements.size(); ++j) {
        if (inst.elements[m.elements[j]].coord != static_cast<int>(j) + 1) {
          bad.push_back(name + " holds an element of another universe in coordinate " +
                        std::to_string(j + 1));
          break;
        }
      }
    } else {
      if (!std::is_sorted(m.elements.begin(), m.elements.end()) ||
          std::adjacent_find(m.elements.begin(), m.elements.end()) != m.elements.end()) {
        bad.push_back(name + " is not a sorted set of distinct elements");
      }
    }
  }
  for (std::size_t id = 0; id < used.size(); ++id) {
    if (!used[id]) bad.push_back("element '" + inst.elements[id].label + "' is in no member");
  }
  return bad;
}

void require_valid(const Instance& inst) {
  auto bad = validate(inst);
  if (!bad.empty()) throw InstanceError("invalid instance: " + bad.front());
}

Instance as_packing(const Instance& inst) {
  Instance out = inst;
  out.kind = ProblemKind::wsp;
  for (auto& e : out.elements) e.coord.reset();
  for (auto& m : out.members) std::sort(m.elements.begin(), m.elements.end());
  return out;
}

Weight solution_weight(const Instance& inst, std::span<const MemberIndex> picked) {
  Weight w = 0;
  for (MemberIndex k : picked) w += inst.members.at(k).weight;
  return w;
}

bool is_feasible_solution(const Instance& inst, const Solution& sol) {
  if (static_cast<int>(sol.picked.size()) != inst.p) return false;
  std::unordered_set<MemberIndex> seen_members;
  std::unordered_set<ElementId> seen_elements;
  for (MemberIndex k : sol.picked) {
    if (k >= inst.members.size() || !seen_members.insert(k).second) return false;
    for (ElementId e : inst.members[k].elements) {
      if (!seen_elements.insert(e).second) return false;
    }
  }
  return solution_weight(inst, sol.picked) == sol.total_weight;
}

std::string format_solution(const std::optional<Solution>& sol) {
  if (!sol) return "REJECT\n";
  std::ostringstream out;
  out << "WEIGHT " << sol->total_weight << '\n';
  for (MemberIndex k : sol->picked) out << "PICK " << k << '\n';
  return out.str();
}

}  // namespace reppack
