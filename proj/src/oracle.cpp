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

#include "reppack/oracle.hpp"

#include <algorithm>
#include <string>

namespace reppack {
namespace {

class Enumerator {
 public:
  explicit Enumerator(const Instance& inst)
      : inst_(inst), used_(inst.universe_size(), false) {}

  std::optional<Solution> run() {
    dfs(0);
    return best_;
  }

 private:
  void dfs(std::size_t start) {
    const std::size_t p = static_cast<std::size_t>(inst_.p);
    if (chosen_.size() == p) {
      if (!best_ || weight_ > best_->total_weight) best_ = Solution{chosen_, weight_};
      return;
    }
    const std::size_t m = inst_.members.size();
    for (std::size_t k = start; k + (p - chosen_.size()) <= m; ++k) {
      const auto& member = inst_.members[k];
      const bool clash = std::any_of(member.elements.begin(), member.elements.end(),
                                     [&](ElementId e) { return used_[e]; });
      if (clash) continue;
      for (ElementId e : member.elements) used_[e] = true;
      chosen_.push_back(member.index);
      weight_ += member.weight;
      dfs(k + 1);
      weight_ -= member.weight;
      chosen_.pop_back();
      for (ElementId e : member.elements) used_[e] = false;
    }
  }

  const Instance& inst_;
  std::vector<bool> used_;
  std::vector<MemberIndex> chosen_;
  Weight weight_ = 0;
  std::optional<Solution> best_;
};

// X-sets as bit rows over the elements that occur in the full family.
class BitFamily {
 public:
  BitFamily(std::span<const Triple> family, const std::vector<ElementId>& index)
      : words_((index.size() + 63) / 64), bits_(family.size() * words_, 0) {
    for (std::size_t t = 0; t < family.size(); ++t) {
      for (ElementId e : family[t].x) {
        auto it = std::lower_bound(index.begin(), index.end(), e);
        if (it == index.end() || *it != e) continue;  // no Y can meet it
        const auto b = static_cast<std::size_t>(it - index.begin());
        bits_[t * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
      }
    }
  }

  bool avoids(std::size_t t, const std::vector<std::uint64_t>& y) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (bits_[t * words_ + w] & y[w]) return false;
    }
    return true;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

void check_arity(std::span<const Triple> family, int s) {
  for (const auto& t : family) {
    if (static_cast<int>(t.x.size()) != s) {
      throw std::invalid_argument("triple of size " + std::to_string(t.x.size()) +
                                  " in a family of " + std::to_string(s) + "-sets");
    }
  }
}

}  // namespace

std::optional<Solution> brute_force_solve(const Instance& inst, OracleBudget budget) {
  require_valid(inst);
  const auto combos = binomial(inst.members.size(), static_cast<std::uint64_t>(inst.p));
  if (combos > budget.max_combinations) {
    throw BudgetExceeded("C(" + std::to_string(inst.members.size()) + ", " +
                         std::to_string(inst.p) + ") exceeds the oracle budget");
  }
  return Enumerator(inst).run();
}

std::optional<RepresentationCounterexample> check_representation(
    std::size_t universe_size, int s, int r, std::span<const Triple> family,
    std::span<const Triple> subfamily, OracleBudget budget) {
  check_arity(family, s);
  check_arity(subfamily, s);
  for (const auto& t : family) {
    for (ElementId e : t.x) {
      if (e >= universe_size) throw std::invalid_argument("element id out of range");
    }
  }

  std::vector<ElementId> index;
  for (const auto& t : family) index.insert(index.end(), t.x.begin(), t.x.end());
  std::sort(index.begin(), index.end());
  index.erase(std::unique(index.begin(), index.end()), index.end());

  const std::size_t n = index.size();
  const std::size_t max_k = std::min<std::size_t>(std::max(r, 0), n);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= max_k; ++k) {
    total += binomial(n, k);
    if (total > budget.max_combinations) {
      throw BudgetExceeded("too many blocker sets to enumerate");
    }
  }

  const BitFamily full(family, index);
  const BitFamily sub(subfamily, index);
  std::vector<std::uint64_t> y((n + 63) / 64, 0);
  std::vector<std::size_t> pick;

  auto check_current = [&]() -> std::optional<RepresentationCounterexample> {
    std::optional<std::size_t> need;
    for (std::size_t t = 0; t < family.size(); ++t) {
      if (full.avoids(t, y) && (!need || family[t].weight > family[*need].weight)) need = t;
    }
    if (!need) return std::nullopt;
    for (std::size_t t = 0; t < subfamily.size(); ++t) {
      if (sub.avoids(t, y) && subfamily[t].weight >= family[*need].weight) return std::nullopt;
    }
    RepresentationCounterexample cex;
    for (std::size_t b : pick) cex.y.push_back(index[b]);
    cex.unserved = *need;
    return cex;
  };

  // All k-subsets of the index, k = 0..max_k, in lexicographic order.
  for (std::size_t k = 0; k <= max_k; ++k) {
    pick.resize(k);
    for (std::size_t j = 0; j < k; ++j) pick[j] = j;
    while (true) {
      std::fill(y.begin(), y.end(), 0);
      for (std::size_t b : pick) y[b / 64] |= std::uint64_t{1} << (b % 64);
      if (auto cex = check_current()) return cex;
      std::size_t j = k;
      while (j > 0 && pick[j - 1] == n - k + j - 1) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t l = j; l < k; ++l) pick[l] = pick[l - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace reppack
