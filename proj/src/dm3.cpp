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

#include "reppack/dm3.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "parallel.hpp"

namespace reppack {
namespace {

using Mask = std::uint32_t;

// One (t, r) round of the search for a p-matching, given a (p-1)-matching.
class AnchorPoolSearch {
 public:
  AnchorPoolSearch(const Instance& inst, int p, const PartialSolution& smaller, int t, int r)
      : inst_(inst), p_(p), t_(t), r_(r) {
    const int tc = t - 1;
    for (MemberIndex k : smaller) {
      for (int j = 0; j < 3; ++j) {
        if (j != tc) pool_.push_back(inst.members[k].elements[j]);
      }
    }
    std::sort(pool_.begin(), pool_.end());
    std::vector<int> bit(inst.universe_size(), -1);
    for (std::size_t b = 0; b < pool_.size(); ++b) bit[pool_[b]] = static_cast<int>(b);

    mask_of_.resize(inst.members.size(), 0);
    rest_of_.resize(inst.members.size());
    for (const auto& m : inst.members) {
      for (int j = 0; j < 3; ++j) {
        if (j == tc) continue;
        const int b = bit[m.elements[j]];
        if (b >= 0) mask_of_[m.index] |= Mask{1} << b;
        else rest_of_[m.index].push_back(m.elements[j]);
      }
      std::sort(rest_of_[m.index].begin(), rest_of_[m.index].end());
    }

    anchors_ = inst.universe(t);
    std::vector<std::size_t> slot(inst.universe_size(), 0);
    for (std::size_t a = 0; a < anchors_.size(); ++a) slot[anchors_[a]] = a;
    by_anchor_.resize(anchors_.size());
    for (const auto& m : inst.members) by_anchor_[slot[m.elements[tc]]].push_back(m.index);

    // Subsets P of the pool with 2 - r <= |P| <= 2p - r, by popcount then value.
    const int lo = std::max(0, 2 - r);
    const int hi = 2 * p - r;
    for (Mask m = 0; m < (Mask{1} << pool_.size()); ++m) {
      const int pc = std::popcount(m);
      if (pc >= lo && pc <= hi) masks_.push_back(m);
    }
    std::stable_sort(masks_.begin(), masks_.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  }

  std::optional<PartialSolution> run(SolveStats& stats, const Dm3CellObserver& observer) {
    const std::size_t cells = std::size_t{1} << pool_.size();
    using Row = std::vector<std::vector<PartialSolution>>;  // [i], 1..p
    std::vector<Row> prev(cells, Row(p_ + 1)), cur(cells, Row(p_ + 1));
    const std::size_t n = inst_.universe_size();

    for (std::size_t a = 0; a < anchors_.size(); ++a) {
      const auto& here = by_anchor_[a];
      for (Mask mask : masks_) {
        const int pc = std::popcount(mask);
        auto& cell = cur[mask];
        for (auto& c : cell) c.clear();

        const int s1 = 2 - pc;
        if (s1 >= 0) {
          std::vector<Triple> family;
          for (const auto& partial : prev[mask][1]) family.push_back(triple(partial));
          for (MemberIndex k : here) {
            if (mask_of_[k] == mask) family.push_back(triple({k}));
          }
          cell[1] = partials_of(represent({n, s1, r_ - s1}, std::move(family)));
          ++stats.represent_calls;
        }

        if (a > 0) {
          const int imax = std::min(p_, (pc + r_) / 2);
          for (int i = 2; i <= imax; ++i) {
            const int s = 2 * i - pc;
            if (s < 0) continue;
            std::vector<Triple> family;
            for (const auto& partial : prev[mask][i]) family.push_back(triple(partial));
            // P' ranges over the subsets of P; the new tuple covers P \ P'.
            for (Mask sub = 0;; sub = (sub - mask) & mask) {
              const Mask needed = mask & ~sub;
              for (MemberIndex k : here) {
                if (mask_of_[k] != needed) continue;
                for (const auto& partial : prev[sub][i - 1]) {
                  if (!disjoint(partial, k)) continue;
                  PartialSolution grown = partial;
                  grown.push_back(k);
                  family.push_back(triple(grown));
                }
              }
              if (sub == mask) break;
            }
            cell[i] = partials_of(represent({n, s, r_ - s}, std::move(family)));
            ++stats.represent_calls;
          }
        }

        for (int i = 1; i <= p_; ++i) {
          stats.peak_cell_size = std::max(stats.peak_cell_size, cell[i].size());
        }
        if (observer) report(observer, anchors_[a], mask, cell);
      }
      std::swap(prev, cur);
    }

    for (Mask mask : masks_) {
      if (!prev[mask][p_].empty()) return prev[mask][p_].front();
    }
    return std::nullopt;
  }

 private:
  Triple triple(const PartialSolution& partial) const {
    Triple t;
    t.payload.members = partial;
    t.weight = 1;
    for (MemberIndex k : partial) t.x.insert(t.x.end(), rest_of_[k].begin(), rest_of_[k].end());
    std::sort(t.x.begin(), t.x.end());
    return t;
  }

  static std::vector<PartialSolution> partials_of(std::vector<Triple>&& triples) {
    std::vector<PartialSolution> out;
    out.reserve(triples.size());
    for (auto& t : triples) out.push_back(std::move(t.payload.members));
    return out;
  }

  bool disjoint(const PartialSolution& partial, MemberIndex k) const {
    const auto& add = inst_.members[k].elements;
    for (MemberIndex other : partial) {
      for (ElementId e : inst_.members[other].elements) {
        if (std::find(add.begin(), add.end(), e) != add.end()) return false;
      }
    }
    return true;
  }

  void report(const Dm3CellObserver& observer, ElementId u, Mask mask,
              const std::vector<std::vector<PartialSolution>>& cell) const {
    std::vector<ElementId> subset;
    for (std::size_t b = 0; b < pool_.size(); ++b) {
      if (mask >> b & 1) subset.push_back(pool_[b]);
    }
    for (int i = 1; i <= p_; ++i) {
      observer(Dm3CellView{p_, t_, r_, u, i, pool_, subset, cell[i]});
    }
  }

  const Instance& inst_;
  int p_;
  int t_;
  int r_;
  std::vector<ElementId> pool_;
  std::vector<Mask> mask_of_;
  std::vector<ElementSet> rest_of_;
  std::vector<ElementId> anchors_;
  std::vector<std::vector<MemberIndex>> by_anchor_;
  std::vector<Mask> masks_;
};

void require_dm3(const Instance& inst) {
  if (inst.kind != ProblemKind::wdm || inst.q != 3) {
    throw InstanceError("the dm3 solver needs a WDM instance with q = 3");
  }
  require_valid(inst);
  if (inst.p > 16) throw InstanceError("the dm3 solver supports p <= 16");
  for (const auto& m : inst.members) {
    if (m.weight != inst.members.front().weight) {
      throw InstanceError("the dm3 solver needs equal weights on all tuples");
    }
  }
}

}  // namespace

SolveResult solve_dm3(const Instance& inst, const SolverOptions& options,
                      const Dm3CellObserver& observer) {
  require_dm3(inst);
  SolveResult result;
  if (inst.members.empty()) return result;

  PartialSolution matching{inst.members.front().index};
  for (int level = 2; level <= inst.p; ++level) {
    struct Job {
      int t;
      int r;
    };
    std::vector<Job> jobs;
    for (int t = 1; t <= 3; ++t) {
      for (int r = 0; r <= (2 * level + 4) / 3; ++r) jobs.push_back({t, r});
    }

    std::optional<PartialSolution> found;
    const std::size_t batch = std::max(1, options.threads);
    for (std::size_t first = 0; first < jobs.size() && !found; first += batch) {
      const std::size_t count = std::min(batch, jobs.size() - first);
      std::vector<std::optional<PartialSolution>> out(count);
      std::vector<SolveStats> stats(count);
      detail::parallel_for(count, options.threads, [&](std::size_t k) {
        const Job& job = jobs[first + k];
        AnchorPoolSearch search(inst, level, matching, job.t, job.r);
        out[k] = search.run(stats[k], observer);
      });
      // Only rounds up to the first success count, as in a sequential run.
      for (std::size_t k = 0; k < count; ++k) {
        result.stats.represent_calls += stats[k].represent_calls;
        result.stats.peak_cell_size =
            std::max(result.stats.peak_cell_size, stats[k].peak_cell_size);
        if (out[k]) {
          found = std::move(out[k]);
          break;
        }
      }
    }
    if (!found) return result;
    matching = std::move(*found);
  }

  std::sort(matching.begin(), matching.end());
  const Weight w = inst.members.front().weight * inst.p;
  result.solution = Solution{std::move(matching), w};
  return result;
}

}  // namespace reppack
