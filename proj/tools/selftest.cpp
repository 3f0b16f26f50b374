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

// Invariant suites behind `reppack selftest`. Every check compares a
// solver against the brute-force instruments on seeded instances.

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "reppack/dm3.hpp"
#include "reppack/generate.hpp"
#include "reppack/kernel.hpp"
#include "reppack/oracle.hpp"
#include "reppack/repset.hpp"
#include "reppack/wdm.hpp"
#include "reppack/wsp.hpp"

namespace reppack::cli {
namespace {

std::optional<Weight> weight_of(const std::optional<Solution>& s) {
  if (!s) return std::nullopt;
  return s->total_weight;
}

std::string show(const std::optional<Weight>& w) {
  return w ? std::to_string(*w) : std::string("REJECT");
}

GeneratorSpec small_spec(std::uint64_t seed, ProblemKind kind, int q, int p) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.kind = kind;
  spec.q = q;
  spec.p = p;
  spec.weight_lo = -20;
  spec.weight_hi = 20;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  if (kind == ProblemKind::wdm) {
    for (int j = 0; j < q; ++j) spec.universe_sizes.push_back(p + static_cast<int>(rng() % 3));
  } else {
    spec.universe_sizes.push_back(q * p + static_cast<int>(rng() % 4));
  }
  return spec;
}

std::uint64_t capacity(const GeneratorSpec& spec) {
  if (spec.kind == ProblemKind::wsp) return binomial(spec.universe_sizes[0], spec.q);
  std::uint64_t cap = 1;
  for (int n : spec.universe_sizes) cap *= n;
  return cap;
}

// Planted on even seeds, uniform on odd ones.
Instance random_small(const GeneratorSpec& spec, std::size_t m) {
  const std::uint64_t cap = capacity(spec);
  if (spec.seed % 2 == 0) {
    return gen_planted(spec, std::min<std::uint64_t>(m, cap - spec.p)).instance;
  }
  return gen_random(spec, std::min<std::uint64_t>(m, cap));
}

// Returns an error description, or an empty string on success.
using Check = std::function<std::string(std::uint64_t seed)>;

std::string solver_vs_oracle(std::uint64_t seed, ProblemKind kind, const SolverOptions& opt) {
  const int q = 2 + static_cast<int>(seed % 2);
  const int p = 1 + static_cast<int>((seed / 2) % 3);
  const Instance inst = random_small(small_spec(seed, kind, q, p), 12);
  const auto expect = weight_of(brute_force_solve(inst));
  const auto got = weight_of(kind == ProblemKind::wdm ? solve_wdm(inst, opt).solution
                                                      : solve_wsp(inst, opt).solution);
  if (expect != got) return "oracle " + show(expect) + " vs solver " + show(got);
  return {};
}

std::string dm3_vs_oracle(std::uint64_t seed, const SolverOptions& opt) {
  const int p = 1 + static_cast<int>(seed % 3);
  auto spec = small_spec(seed, ProblemKind::wdm, 3, p);
  spec.weight_lo = spec.weight_hi = 1;
  const Instance inst = random_small(spec, 10);
  const auto expect = brute_force_solve(inst).has_value();
  const auto got = solve_dm3(inst, opt).solution;
  if (expect != got.has_value()) return "verdict mismatch";
  if (got && !is_feasible_solution(inst, *got)) return "infeasible matching returned";
  return {};
}

std::string repset_sound(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = 4 + rng() % 8;
  const int s = static_cast<int>(rng() % 4);
  const int r = static_cast<int>(rng() % 4);
  if (static_cast<std::size_t>(s) > n) return {};
  std::vector<Triple> family(rng() % 30);
  for (auto& t : family) {
    std::vector<ElementId> pool(n);
    for (std::size_t e = 0; e < n; ++e) pool[e] = static_cast<ElementId>(e);
    std::shuffle(pool.begin(), pool.end(), rng);
    t.x.assign(pool.begin(), pool.begin() + s);
    std::sort(t.x.begin(), t.x.end());
    t.weight = static_cast<Weight>(rng() % 11) - 5;
  }
  const RepQuery query{n, s, r};
  const auto kept = represent(query, family);
  if (kept.size() > binomial(s + r, s)) return "size bound exceeded";
  if (check_representation(n, s, r, family, kept)) return "representation counterexample";
  return {};
}

std::string kernel_pipeline(std::uint64_t seed, const SolverOptions& opt) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.kind = seed % 2 ? ProblemKind::wsp : ProblemKind::wdm;
  spec.q = 3;
  spec.p = 2;
  spec.weight_lo = -5;
  spec.weight_hi = 20;
  spec.universe_sizes = spec.kind == ProblemKind::wdm ? std::vector<int>{6, 6, 6}
                                                      : std::vector<int>{12};
  const Instance inst = gen_random(spec, 60);
  const KernelResult kr = kernelize(inst);
  if (kr.kernel.members.size() > kernel_bound(spec.q, spec.p)) return "kernel too large";
  const auto a = weight_of(brute_force_solve(inst));
  const auto b = weight_of(brute_force_solve(kr.kernel));
  const auto c = weight_of(inst.kind == ProblemKind::wdm ? solve_wdm(kr.kernel, opt).solution
                                                         : solve_wsp(kr.kernel, opt).solution);
  if (a != b || a != c) return "kernel changed the optimum";
  return {};
}

std::string round_trip(std::uint64_t seed) {
  const Instance inst =
      random_small(small_spec(seed, seed % 3 ? ProblemKind::wsp : ProblemKind::wdm, 3, 2), 10);
  if (!validate(inst).empty()) return "generated instance is invalid";
  if (parse_instance(serialize_instance(inst)) != inst) return "serialization round trip differs";
  return {};
}

}  // namespace

int run_selftest(bool quick, int threads, std::ostream& out) {
  const SolverOptions opt{threads};
  const std::uint64_t scale = quick ? 1 : 5;
  struct Suite {
    std::string name;
    std::uint64_t cases;
    Check check;
  };
  const std::vector<Suite> suites = {
      {"instance round trip", 20 * scale, round_trip},
      {"representative family soundness", 100 * scale, repset_sound},
      {"wdm matches oracle", 40 * scale,
       [&](std::uint64_t s) { return solver_vs_oracle(s, ProblemKind::wdm, opt); }},
      {"wsp matches oracle", 40 * scale,
       [&](std::uint64_t s) { return solver_vs_oracle(s, ProblemKind::wsp, opt); }},
      {"dm3 matches oracle", 20 * scale, [&](std::uint64_t s) { return dm3_vs_oracle(s, opt); }},
      {"kernel preserves optimum", 10 * scale,
       [&](std::uint64_t s) { return kernel_pipeline(s, opt); }},
  };

  int failed = 0;
  for (const auto& suite : suites) {
    std::string error;
    std::uint64_t seed = 1;
    for (; seed <= suite.cases && error.empty(); ++seed) {
      try {
        error = suite.check(seed);
      } catch (const std::exception& e) {
        error = e.what();
      }
    }
    if (error.empty()) {
      out << "PASS " << suite.name << " (" << suite.cases << " cases)\n";
    } else {
      ++failed;
      out << "FAIL " << suite.name << " (seed " << seed - 1 << "): " << error << '\n';
    }
  }
  return failed == 0 ? kSolved : kInvariant;
}

}  // namespace reppack::cli
