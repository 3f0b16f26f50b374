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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "reppack/instance.hpp"
#include "reppack/solver.hpp"

namespace reppack::cli {

enum ExitCode : int {
  kSolved = 0,
  kRejected = 1,
  kUsage = 2,
  kInvariant = 3,
};

// Raised for bad input or an algorithm/instance mismatch (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a solver output fails its own guarantees (exit 3).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::string algorithm;
  int q = 0;
  int p = 0;
  std::size_t members = 0;
  std::size_t universe = 0;
  double millis = 0;
  std::size_t peak_cell_size = 0;
  std::optional<Solution> result;
};

Instance read_instance_file(const std::string& path);

// Solves `inst` with algorithm wdm|wsp|dm3|brute, optionally through the
// matching kernel, and checks the answer against the original instance.
RunReport run_solver(const Instance& inst, const std::string& algorithm, bool use_kernel,
                     const SolverOptions& options);

// Largest cell size the algorithm may ever store for (q, p).
std::uint64_t cell_bound(const std::string& algorithm, int q, int p);

int run_selftest(bool quick, int threads, std::ostream& out);

}  // namespace reppack::cli
