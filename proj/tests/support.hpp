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


// Brute-force helpers shared by the unit and acceptance tests.

#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "reppack/dm3.hpp"
#include "reppack/generate.hpp"
#include "reppack/instance.hpp"
#include "reppack/oracle.hpp"
#include "reppack/repset.hpp"
#include "reppack/solver.hpp"
#include "reppack/wdm.hpp"
#include "reppack/wsp.hpp"

namespace reppack::testing {

inline bool pairwise_disjoint(const Instance& inst, const std::vector<MemberIndex>& picked) {
  std::vector<ElementId> all;
  for (MemberIndex k : picked) {
    all.insert(all.end(), inst.members[k].elements.begin(), inst.members[k].elements.end());
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

// Every pairwise disjoint i-subset of `pool`, each listed ascending.
inline std::vector<PartialSolution> disjoint_subsets(const Instance& inst,
                                                     const std::vector<MemberIndex>& pool, int i) {
  std::vector<PartialSolution> out;
  PartialSolution cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == i) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < pool.size(); ++k) {
      cur.push_back(pool[k]);
      if (pairwise_disjoint(inst, cur)) rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Members anchored at an element no later than `u` in `anchors`, where the
// anchor of a member is its element at `position`.
inline std::vector<MemberIndex> anchored_up_to(const Instance& inst,
                                               const std::vector<ElementId>& anchors, ElementId u,
                                               std::size_t position) {
  const auto last = std::find(anchors.begin(), anchors.end(), u);
  std::vector<MemberIndex> out;
  for (const auto& m : inst.members) {
    if (std::find(anchors.begin(), last + 1, m.elements[position]) != last + 1) {
      out.push_back(m.index);
    }
  }
  return out;
}

inline std::vector<Triple> as_triples(const Instance& inst,
                                      const std::vector<PartialSolution>& family,
                                      Triple (*to_triple)(const Instance&, const PartialSolution&)) {
  std::vector<Triple> out;
  for (const auto& partial : family) out.push_back(to_triple(inst, partial));
  return out;
}

inline GeneratorSpec spec_of(std::uint64_t seed, ProblemKind kind, int q, int p,
                             std::vector<int> sizes, Weight lo, Weight hi) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.kind = kind;
  spec.q = q;
  spec.p = p;
  spec.universe_sizes = std::move(sizes);
  spec.weight_lo = lo;
  spec.weight_hi = hi;
  return spec;
}

inline std::uint64_t member_capacity(const GeneratorSpec& spec) {
  if (spec.kind == ProblemKind::wsp) return binomial(spec.universe_sizes[0], spec.q);
  std::uint64_t cap = 1;
  for (int n : spec.universe_sizes) cap *= n;
  return cap;
}

// Runs the weighted solver for `inst` and checks every cell M[u, i]
// against the brute-forced SOL_{u, i}. Returns the first failure, or an
// empty string.
inline std::string weighted_cell_failure(const Instance& inst) {
  const bool matching = inst.kind == ProblemKind::wdm;
  const int c = matching ? inst.q - 1 : inst.q;
  const auto anchors = inst.universe(matching ? 1 : 0);
  const auto to_triple = matching ? &wdm_triple : &wsp_triple;
  std::string failure;
  const CellObserver observer = [&](ElementId u, int i, std::span<const PartialSolution> cell) {
    if (!failure.empty()) return;
    const auto sol = disjoint_subsets(inst, anchored_up_to(inst, anchors, u, 0), i);
    const std::vector<PartialSolution> kept(cell.begin(), cell.end());
    for (const auto& partial : kept) {
      const PartialSolution sorted = [&] {
        auto v = partial;
        std::sort(v.begin(), v.end());
        return v;
      }();
      if (std::find(sol.begin(), sol.end(), sorted) == sol.end()) {
        failure = "cell holds a partial outside SOL at u=" + std::to_string(u);
        return;
      }
    }
    const int s = (inst.q - 1) * i;
    const int r = c * (inst.p - i);
    if (kept.size() > binomial(s + r, s)) {
      failure = "cell too large at u=" + std::to_string(u) + " i=" + std::to_string(i);
      return;
    }
    if (check_representation(inst.universe_size(), s, r, as_triples(inst, sol, to_triple),
                             as_triples(inst, kept, to_triple))) {
      failure = "cell does not represent SOL at u=" + std::to_string(u) + " i=" + std::to_string(i);
    }
  };
  if (matching) {
    solve_wdm(inst, {}, observer);
  } else {
    solve_wsp(inst, {}, observer);
  }
  return failure;
}

// Same check for the unweighted three-dimensional solver: every reported
// cell M[u, i, P] must represent SOL_{t, u, i, P_t, P} with radius
// r - (2i - |P|).
inline std::string dm3_cell_failure(const Instance& inst, std::size_t* cells_checked = nullptr) {
  std::string failure;
  const Dm3CellObserver observer = [&](const Dm3CellView& v) {
    if (!failure.empty()) return;
    const int s = 2 * v.i - static_cast<int>(v.pool_subset.size());
    const int radius = v.r - s;
    if (s < 0 || radius < 0) {
      if (s < 0 && !v.cell.empty()) failure = "cell with |P| > 2i is not empty";
      return;
    }
    const auto anchors = inst.universe(v.t);
    const std::size_t tc = static_cast<std::size_t>(v.t - 1);
    const auto in_pool = [&](ElementId e) {
      return std::find(v.anchor_pool.begin(), v.anchor_pool.end(), e) != v.anchor_pool.end();
    };
    const auto tri = [&](const PartialSolution& partial) {
      Triple t;
      t.payload.members = partial;
      t.weight = 1;
      for (MemberIndex k : partial) {
        const auto& el = inst.members[k].elements;
        for (std::size_t j = 0; j < el.size(); ++j) {
          if (j != tc && !in_pool(el[j])) t.x.push_back(el[j]);
        }
      }
      std::sort(t.x.begin(), t.x.end());
      return t;
    };
    const auto touched = [&](const PartialSolution& partial) {
      ElementSet hit;
      for (MemberIndex k : partial) {
        for (ElementId e : inst.members[k].elements) {
          if (in_pool(e)) hit.push_back(e);
        }
      }
      std::sort(hit.begin(), hit.end());
      return hit;
    };
    const ElementSet target(v.pool_subset.begin(), v.pool_subset.end());
    std::vector<Triple> sol;
    for (const auto& partial : disjoint_subsets(inst, anchored_up_to(inst, anchors, v.u, tc), v.i)) {
      if (touched(partial) == target) sol.push_back(tri(partial));
    }
    std::vector<Triple> kept;
    for (const auto& partial : v.cell) {
      auto sorted = partial;
      std::sort(sorted.begin(), sorted.end());
      if (touched(partial) != target || !pairwise_disjoint(inst, sorted)) {
        failure = "cell holds a partial outside SOL";
        return;
      }
      kept.push_back(tri(partial));
    }
    if (cells_checked) ++*cells_checked;
    if (kept.size() > binomial(v.r, s)) {
      failure = "cell too large";
      return;
    }
    if (check_representation(inst.universe_size(), s, radius, sol, kept)) {
      failure = "cell does not represent SOL (t=" + std::to_string(v.t) +
                " r=" + std::to_string(v.r) + " u=" + std::to_string(v.u) +
                " i=" + std::to_string(v.i) + ")";
    }
  };
  solve_dm3(inst, {}, observer);
  return failure;
}

}  // namespace reppack::testing
