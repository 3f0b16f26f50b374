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

#include "anchored_dp.hpp"

#include <algorithm>
#include <iterator>

#include "parallel.hpp"

namespace reppack::detail {
namespace {

AnchoredLayout group_by_anchor(const Instance& inst, std::vector<ElementId> anchors) {
  AnchoredLayout layout;
  layout.inst = &inst;
  std::vector<std::size_t> slot(inst.universe_size(), anchors.size());
  for (std::size_t a = 0; a < anchors.size(); ++a) slot[anchors[a]] = a;
  layout.by_anchor.resize(anchors.size());
  for (const auto& m : inst.members) layout.by_anchor[slot[m.elements.front()]].push_back(m.index);
  layout.anchors = std::move(anchors);
  return layout;
}

std::vector<PartialSolution> partials_of(std::vector<Triple>&& triples) {
  std::vector<PartialSolution> out;
  out.reserve(triples.size());
  for (auto& t : triples) out.push_back(std::move(t.payload.members));
  return out;
}

}  // namespace

AnchoredLayout matching_layout(const Instance& inst) {
  auto layout = group_by_anchor(inst, inst.universe(1));
  layout.radius_per_member = inst.q - 1;
  layout.check_anchor = false;
  return layout;
}

AnchoredLayout packing_layout(const Instance& inst) {
  auto layout = group_by_anchor(inst, inst.universe(0));
  layout.radius_per_member = inst.q;
  layout.check_anchor = true;
  return layout;
}

Triple partial_triple(const AnchoredLayout& layout, const PartialSolution& partial) {
  Triple t;
  t.payload.members = partial;
  for (MemberIndex k : partial) {
    const auto& m = layout.inst->members.at(k);
    t.x.insert(t.x.end(), m.elements.begin() + 1, m.elements.end());
    t.weight += m.weight;
  }
  std::sort(t.x.begin(), t.x.end());
  return t;
}

std::vector<Triple> add_member(const AnchoredLayout& layout, int i, MemberIndex member,
                               std::span<const PartialSolution> partials,
                               std::size_t* represent_calls) {
  const Instance& inst = *layout.inst;
  const int q = inst.q;
  const int p = inst.p;
  const auto& seq = inst.members.at(member).elements;
  const Weight w = inst.members[member].weight;

  // j = 1: place the anchor. It can only clash in a packing, where an
  // earlier set may hold it as a non-smallest element.
  std::vector<Triple> placed;
  placed.reserve(partials.size());
  for (const auto& partial : partials) {
    Triple t = partial_triple(layout, partial);
    if (layout.check_anchor && std::binary_search(t.x.begin(), t.x.end(), seq.front())) continue;
    t.payload.members.push_back(member);
    t.payload.prefix = 1;
    t.weight += w;
    placed.push_back(std::move(t));
  }

  for (int j = 2; j <= q; ++j) {
    const ElementId uj = seq[j - 1];
    std::vector<Triple> grown;
    grown.reserve(placed.size());
    for (auto& t : placed) {
      auto pos = std::lower_bound(t.x.begin(), t.x.end(), uj);
      if (pos != t.x.end() && *pos == uj) continue;
      t.x.insert(pos, uj);
      t.payload.prefix = j;
      grown.push_back(std::move(t));
    }
    const RepQuery query{inst.universe_size(), (q - 1) * (i - 1) + (j - 1),
                         layout.radius_per_member * (p - i) + (q - j)};
    placed = represent(query, std::move(grown));
    if (represent_calls) ++*represent_calls;
    if (placed.empty()) break;
  }
  for (auto& t : placed) t.payload.prefix = 0;
  return placed;
}

SolveResult run_anchored_dp(const AnchoredLayout& layout, const SolverOptions& options,
                            const CellObserver& observer) {
  const Instance& inst = *layout.inst;
  const int q = inst.q;
  const int p = inst.p;
  const std::size_t n = inst.universe_size();
  const int c = layout.radius_per_member;

  SolveResult result;
  // prev[i] = M[u', i], cur[i] = M[u, i]; index 0 unused.
  std::vector<std::vector<PartialSolution>> prev(p + 1), cur(p + 1);

  for (std::size_t a = 0; a < layout.anchors.size(); ++a) {
    const ElementId u = layout.anchors[a];
    const auto& members_here = layout.by_anchor[a];

    if (members_here.empty()) {
      // Nothing new is anchored here, so every SOL_{u,i} equals SOL_{u',i}
      // and the previous cells already represent it with the same radii.
      cur = prev;
    } else {
      // M[u,1] from M[u',1] plus the new singletons.
      std::vector<Triple> singles;
      for (const auto& partial : prev[1]) singles.push_back(partial_triple(layout, partial));
      for (MemberIndex k : members_here) singles.push_back(partial_triple(layout, {k}));
      cur[1] = partials_of(represent({n, q - 1, c * (p - 1)}, std::move(singles)));
      ++result.stats.represent_calls;

      for (int i = 2; i <= p; ++i) {
        cur[i].clear();
        if (a == 0) continue;
        std::vector<Triple> family;
        for (const auto& partial : prev[i]) family.push_back(partial_triple(layout, partial));
        std::vector<std::vector<Triple>> extended(members_here.size());
        std::vector<std::size_t> calls(members_here.size(), 0);
        if (!prev[i - 1].empty()) {
          parallel_for(members_here.size(), options.threads, [&](std::size_t k) {
            extended[k] = add_member(layout, i, members_here[k], prev[i - 1], &calls[k]);
          });
        }
        for (std::size_t k = 0; k < members_here.size(); ++k) {
          result.stats.represent_calls += calls[k];
          std::move(extended[k].begin(), extended[k].end(), std::back_inserter(family));
        }
        cur[i] = partials_of(represent({n, (q - 1) * i, c * (p - i)}, std::move(family)));
        ++result.stats.represent_calls;
      }
    }

    for (int i = 1; i <= p; ++i) {
      result.stats.peak_cell_size = std::max(result.stats.peak_cell_size, cur[i].size());
      if (observer) observer(u, i, cur[i]);
    }
    std::swap(prev, cur);
  }

  const PartialSolution* best = nullptr;
  Weight best_weight = 0;
  for (const auto& partial : prev[p]) {
    const Weight w = solution_weight(inst, partial);
    if (!best || w > best_weight) {
      best = &partial;
      best_weight = w;
    }
  }
  if (best) {
    Solution sol{*best, best_weight};
    std::sort(sol.picked.begin(), sol.picked.end());
    result.solution = std::move(sol);
  }
  return result;
}

}  // namespace reppack::detail
