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

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "reppack/dm3.hpp"
#include "reppack/kernel.hpp"
#include "reppack/oracle.hpp"
#include "reppack/repset.hpp"
#include "reppack/wdm.hpp"
#include "reppack/wsp.hpp"

namespace reppack::cli {

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return parse_instance(in);
  } catch (const InstanceError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

namespace {

// The instance the algorithm actually runs on; member indices are shared
// with the input.
Instance prepare(const Instance& inst, const std::string& algorithm) {
  if (algorithm == "wdm") {
    if (inst.kind != ProblemKind::wdm) throw UsageError("--alg wdm needs a WDM instance");
    return inst;
  }
  if (algorithm == "wsp") return inst.kind == ProblemKind::wsp ? inst : as_packing(inst);
  if (algorithm == "dm3") {
    if (inst.kind != ProblemKind::wdm || inst.q != 3) {
      throw UsageError("--alg dm3 needs a WDM instance with q = 3");
    }
    for (const auto& m : inst.members) {
      if (m.weight != inst.members.front().weight) {
        throw UsageError("--alg dm3 only solves unweighted instances (all weights equal)");
      }
    }
    if (inst.p > kDm3MaxP) {
      throw UsageError("--alg dm3 supports p <= " + std::to_string(kDm3MaxP) + " (got " +
                       std::to_string(inst.p) + ")");
    }
    return inst;
  }
  if (algorithm == "brute") return inst;
  throw UsageError("unknown algorithm '" + algorithm + "'");
}

SolveResult dispatch(const Instance& inst, const std::string& algorithm,
                     const SolverOptions& options) {
  if (algorithm == "wdm") return solve_wdm(inst, options);
  if (algorithm == "wsp") return solve_wsp(inst, options);
  if (algorithm == "dm3") return solve_dm3(inst, options);
  SolveResult out;
  try {
    out.solution = brute_force_solve(inst);
  } catch (const BudgetExceeded& e) {
    throw UsageError(std::string("instance too large for the brute-force oracle: ") + e.what());
  }
  return out;
}

}  // namespace

RunReport run_solver(const Instance& inst, const std::string& algorithm, bool use_kernel,
                     const SolverOptions& options) {
  const Instance target = prepare(inst, algorithm);
  if (auto bad = validate(target); !bad.empty()) throw UsageError("invalid instance: " + bad.front());

  RunReport report;
  report.algorithm = algorithm + (use_kernel ? "+kernel" : "");
  report.q = inst.q;
  report.p = inst.p;
  report.members = inst.members.size();
  report.universe = inst.universe_size();

  const auto start = std::chrono::steady_clock::now();
  SolveResult solved;
  if (use_kernel) {
    const KernelResult kr = kernelize(target);
    solved = dispatch(kr.kernel, algorithm, options);
    if (solved.solution) solved.solution = lift_solution(kr, *solved.solution);
  } else {
    solved = dispatch(target, algorithm, options);
  }
  report.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.peak_cell_size = solved.stats.peak_cell_size;
  report.result = std::move(solved.solution);

  if (report.result && !is_feasible_solution(inst, *report.result)) {
    throw InvariantViolation("solver returned an infeasible solution");
  }
  if (report.peak_cell_size > cell_bound(algorithm, inst.q, inst.p)) {
    throw InvariantViolation("DP cell of size " + std::to_string(report.peak_cell_size) +
                             " exceeds the representative-family bound");
  }
  return report;
}

std::uint64_t cell_bound(const std::string& algorithm, int q, int p) {
  std::uint64_t bound = 0;
  if (algorithm == "wdm") {
    for (int i = 1; i <= p; ++i) bound = std::max(bound, binomial((q - 1) * p, (q - 1) * i));
  } else if (algorithm == "wsp") {
    for (int i = 1; i <= p; ++i) {
      bound = std::max(bound, binomial((q - 1) * i + q * (p - i), (q - 1) * i));
    }
  } else if (algorithm == "dm3") {
    for (int r = 0; r <= (2 * p + 4) / 3; ++r) bound = std::max(bound, binomial(r, r / 2));
  }
  return bound;
}

}  // namespace reppack::cli
