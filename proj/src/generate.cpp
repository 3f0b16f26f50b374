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

#include "reppack/generate.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "reppack/repset.hpp"

namespace reppack {
namespace {

// std::uniform_int_distribution is implementation-defined; this keeps the
// streams identical across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = rng_();
    } while (x >= limit);
    return x % n;
  }

  Weight weight(Weight lo, Weight hi) {
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<Weight>(rng_());
    return static_cast<Weight>(static_cast<std::uint64_t>(lo) + below(span + 1));
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  // k distinct values of [0, n), in draw order.
  std::vector<int> sample(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + below(n - i)]);
    pool.resize(k);
    return pool;
  }

 private:
  std::mt19937_64 rng_;
};

using Shape = std::vector<int>;  // per-coordinate indices, or sorted set

void check_spec(const GeneratorSpec& spec) {
  if (spec.q < 2) throw InstanceError("q must be at least 2");
  if (spec.p < 1) throw InstanceError("p must be at least 1");
  if (spec.weight_lo > spec.weight_hi) throw InstanceError("weight_lo exceeds weight_hi");
  const std::size_t want = spec.kind == ProblemKind::wdm ? spec.q : 1;
  if (spec.universe_sizes.size() != want) {
    throw InstanceError("expected " + std::to_string(want) + " universe size(s)");
  }
  for (int n : spec.universe_sizes) {
    if (n < 1) throw InstanceError("universe sizes must be positive");
  }
}

std::uint64_t distinct_members(const GeneratorSpec& spec) {
  if (spec.kind == ProblemKind::wsp) return binomial(spec.universe_sizes[0], spec.q);
  std::uint64_t total = 1;
  for (int n : spec.universe_sizes) {
    if (total > std::numeric_limits<std::uint64_t>::max() / n) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= n;
  }
  return total;
}

Shape random_shape(const GeneratorSpec& spec, Draw& draw) {
  if (spec.kind == ProblemKind::wsp) {
    Shape s = draw.sample(spec.universe_sizes[0], spec.q);
    std::sort(s.begin(), s.end());
    return s;
  }
  Shape s(spec.q);
  for (int j = 0; j < spec.q; ++j) s[j] = static_cast<int>(draw.below(spec.universe_sizes[j]));
  return s;
}

std::string label(const GeneratorSpec& spec, int coord, int k) {
  if (spec.kind == ProblemKind::wsp) return "e" + std::to_string(k);
  return "u" + std::to_string(coord + 1) + "_" + std::to_string(k);
}

struct Drawn {
  Shape shape;
  Weight weight;
};

Instance assemble(const GeneratorSpec& spec, const std::vector<Drawn>& members) {
  InstanceBuilder builder(spec.kind, spec.q, spec.p);
  std::vector<std::string> labels(spec.q);
  for (const auto& m : members) {
    for (int j = 0; j < spec.q; ++j) labels[j] = label(spec, j, m.shape[j]);
    builder.add_member(labels, m.weight);
  }
  return std::move(builder).build();
}

void draw_extra(const GeneratorSpec& spec, std::size_t count, Draw& draw,
                std::set<Shape>& seen, std::vector<Drawn>& out) {
  while (count > 0) {
    Shape s = random_shape(spec, draw);
    if (!seen.insert(s).second) continue;
    out.push_back({std::move(s), draw.weight(spec.weight_lo, spec.weight_hi)});
    --count;
  }
}

}  // namespace

Instance gen_random(const GeneratorSpec& spec, std::size_t m) {
  check_spec(spec);
  if (m < 1) throw InstanceError("m must be at least 1");
  if (m > distinct_members(spec)) {
    throw InstanceError("requested " + std::to_string(m) + " members but only " +
                        std::to_string(distinct_members(spec)) + " distinct ones exist");
  }
  Draw draw(spec.seed);
  std::set<Shape> seen;
  std::vector<Drawn> members;
  draw_extra(spec, m, draw, seen, members);
  return assemble(spec, members);
}

PlantedInstance gen_planted(const GeneratorSpec& spec, std::size_t m_extra) {
  check_spec(spec);
  if (spec.kind == ProblemKind::wdm) {
    for (int n : spec.universe_sizes) {
      if (n < spec.p) throw InstanceError("every universe needs at least p elements");
    }
  } else if (spec.universe_sizes[0] < spec.q * spec.p) {
    throw InstanceError("universe needs at least q*p elements");
  }
  if (m_extra + spec.p > distinct_members(spec)) {
    throw InstanceError("too many members requested for the universe sizes");
  }

  Draw draw(spec.seed);
  std::vector<Drawn> members;
  std::set<Shape> seen;
  PlantedInstance out;
  if (spec.kind == ProblemKind::wdm) {
    std::vector<std::vector<int>> picks;
    for (int j = 0; j < spec.q; ++j) picks.push_back(draw.sample(spec.universe_sizes[j], spec.p));
    for (int k = 0; k < spec.p; ++k) {
      Shape s(spec.q);
      for (int j = 0; j < spec.q; ++j) s[j] = picks[j][k];
      seen.insert(s);
      members.push_back({std::move(s), draw.weight(spec.weight_lo, spec.weight_hi)});
    }
  } else {
    auto pick = draw.sample(spec.universe_sizes[0], spec.q * spec.p);
    for (int k = 0; k < spec.p; ++k) {
      Shape s(pick.begin() + k * spec.q, pick.begin() + (k + 1) * spec.q);
      std::sort(s.begin(), s.end());
      seen.insert(s);
      members.push_back({std::move(s), draw.weight(spec.weight_lo, spec.weight_hi)});
    }
  }
  for (const auto& m : members) out.planted_weight += m.weight;
  draw_extra(spec, m_extra, draw, seen, members);
  draw.shuffle(members);
  out.instance = assemble(spec, members);
  return out;
}

}  // namespace reppack
