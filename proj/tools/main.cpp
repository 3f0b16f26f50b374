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


#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "reppack/generate.hpp"
#include "reppack/kernel.hpp"

namespace {

using namespace reppack;
using namespace reppack::cli;

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--sizes expects positive integers separated by commas, got '" + text + "'");
    }
  }
  if (sizes.empty()) throw UsageError("--sizes is empty");
  return sizes;
}

std::string result_cell(const std::optional<Solution>& s) {
  return s ? std::to_string(s->total_weight) : std::string("REJECT");
}

struct SolveArgs {
  std::string algorithm = "wdm";
  bool kernel = false;
  int threads = 1;
  std::string file;
};

struct GenArgs {
  std::string kind = "wdm";
  int q = 3;
  int p = 2;
  std::string sizes = "6,6,6";
  std::size_t m = 20;
  Weight wlo = 1;
  Weight whi = 1;
  std::uint64_t seed = 0;
  bool planted = false;
  std::string output;
};

struct BenchArgs {
  std::string dir;
  std::string algorithm = "auto";
  bool kernel = false;
  bool timing = true;
  int threads = 1;
};

int cmd_solve(const SolveArgs& a) {
  const Instance inst = read_instance_file(a.file);
  const RunReport report = run_solver(inst, a.algorithm, a.kernel, SolverOptions{a.threads});
  std::cout << format_solution(report.result);
  return report.result ? kSolved : kRejected;
}

int cmd_kernelize(const std::string& file) {
  const Instance inst = read_instance_file(file);
  if (auto bad = validate(inst); !bad.empty()) throw UsageError("invalid instance: " + bad.front());
  std::cout << serialize_kernel(kernelize(inst), inst);
  return kSolved;
}

int cmd_gen(const GenArgs& a) {
  GeneratorSpec spec;
  spec.seed = a.seed;
  if (a.kind == "wdm") {
    spec.kind = ProblemKind::wdm;
  } else if (a.kind == "wsp") {
    spec.kind = ProblemKind::wsp;
  } else {
    throw UsageError("--kind must be wdm or wsp");
  }
  spec.q = a.q;
  spec.p = a.p;
  spec.universe_sizes = parse_sizes(a.sizes);
  spec.weight_lo = a.wlo;
  spec.weight_hi = a.whi;

  std::string text;
  try {
    if (a.planted) {
      const PlantedInstance planted = gen_planted(spec, a.m);
      text = "# PLANTED " + std::to_string(planted.planted_weight) + "\n" +
             serialize_instance(planted.instance);
    } else {
      text = serialize_instance(gen_random(spec, a.m));
    }
  } catch (const InstanceError& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (a.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.output);
    if (!out) throw UsageError("cannot write '" + a.output + "'");
    out << text;
  }
  return kSolved;
}

int cmd_bench(const BenchArgs& a) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(a.dir, ec)) throw UsageError("'" + a.dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".wdm" || ext == ".wsp")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& x, const fs::path& y) { return x.filename() < y.filename(); });

  std::cout << "name\talg\tq\tp\tm\tmillis\tresult\n";
  for (const auto& path : files) {
    const Instance inst = read_instance_file(path.string());
    std::string alg = a.algorithm;
    if (alg == "auto") alg = inst.kind == ProblemKind::wdm ? "wdm" : "wsp";
    const RunReport r = run_solver(inst, alg, a.kernel, SolverOptions{a.threads});
    std::ostringstream millis;
    if (a.timing) {
      millis.setf(std::ios::fixed);
      millis.precision(3);
      millis << r.millis;
    } else {
      millis << '-';
    }
    std::cout << path.filename().string() << '\t' << r.algorithm << '\t' << r.q << '\t' << r.p
              << '\t' << r.members << '\t' << millis.str() << '\t' << result_cell(r.result)
              << '\n';
  }
  return kSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for weighted q-dimensional matching and q-set packing"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("--alg", solve.algorithm, "wdm, wsp, dm3 or brute")
      ->check(CLI::IsMember({"wdm", "wsp", "dm3", "brute"}));
  solve_cmd->add_flag("--kernel", solve.kernel, "Kernelize first and lift the answer back");
  solve_cmd->add_option("--threads", solve.threads, "Worker threads")->check(CLI::PositiveNumber);
  solve_cmd->add_option("file", solve.file, "Instance file")->required();

  std::string kernel_file;
  auto* kernel_cmd = app.add_subcommand("kernelize", "Print the kernel of an instance");
  kernel_cmd->add_option("file", kernel_file, "Instance file")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--kind", gen.kind, "wdm or wsp")->check(CLI::IsMember({"wdm", "wsp"}));
  gen_cmd->add_option("--q", gen.q, "Member arity")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p", gen.p, "Number of members to pick")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--sizes", gen.sizes, "Universe sizes, comma separated");
  gen_cmd->add_option("--m", gen.m, "Members (extra members with --planted)");
  gen_cmd->add_option("--wlo", gen.wlo, "Lowest weight");
  gen_cmd->add_option("--whi", gen.whi, "Highest weight");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_flag("--planted", gen.planted, "Plant p disjoint members");
  gen_cmd->add_option("-o,--output", gen.output, "Output file");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Solve every instance file in a directory");
  bench_cmd->add_option("dir", bench.dir, "Directory of .wdm/.wsp files")->required();
  bench_cmd->add_option("--alg", bench.algorithm, "auto, wdm, wsp, dm3 or brute")
      ->check(CLI::IsMember({"auto", "wdm", "wsp", "dm3", "brute"}));
  bench_cmd->add_flag("--kernel", bench.kernel, "Kernelize first");
  bench_cmd->add_flag("!--no-timing", bench.timing, "Print '-' instead of elapsed time");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads")->check(CLI::PositiveNumber);

  bool quick = false;
  int selftest_threads = 1;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suites");
  selftest_cmd->add_flag("--quick", quick, "Smaller case counts");
  selftest_cmd->add_option("--threads", selftest_threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSolved : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*kernel_cmd) return cmd_kernelize(kernel_file);
    if (*gen_cmd) return cmd_gen(gen);
    if (*bench_cmd) return cmd_bench(bench);
    if (*selftest_cmd) return run_selftest(quick, selftest_threads, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
