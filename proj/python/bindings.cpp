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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "reppack/dm3.hpp"
#include "reppack/generate.hpp"
#include "reppack/instance.hpp"
#include "reppack/kernel.hpp"
#include "reppack/oracle.hpp"
#include "reppack/repset.hpp"
#include "reppack/wdm.hpp"
#include "reppack/wsp.hpp"

namespace py = pybind11;
using namespace reppack;

namespace {

ProblemKind kind_from(const std::string& name) {
  if (name == "wdm") return ProblemKind::wdm;
  if (name == "wsp") return ProblemKind::wsp;
  throw py::value_error("kind must be 'wdm' or 'wsp'");
}

GeneratorSpec make_spec(const std::string& kind, int q, int p, std::vector<int> sizes,
                        std::uint64_t seed, Weight weight_lo, Weight weight_hi) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.kind = kind_from(kind);
  spec.q = q;
  spec.p = p;
  spec.universe_sizes = std::move(sizes);
  spec.weight_lo = weight_lo;
  spec.weight_hi = weight_hi;
  return spec;
}

std::vector<std::size_t> representatives(std::size_t universe_size, int s, int r,
                                         const std::vector<std::pair<ElementSet, Weight>>& family) {
  std::vector<Triple> triples;
  triples.reserve(family.size());
  for (const auto& [x, w] : family) triples.push_back(Triple{x, {}, w});
  return representative_positions({universe_size, s, r}, triples);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact solvers for weighted q-dimensional matching and q-set packing";

  py::register_exception<InstanceError>(m, "InstanceError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<MemberRecord>(m, "Member")
      .def_readonly("index", &MemberRecord::index)
      .def_readonly("elements", &MemberRecord::elements)
      .def_readonly("weight", &MemberRecord::weight);

  py::class_<Instance>(m, "Instance")
      .def_property_readonly(
          "kind", [](const Instance& i) { return i.kind == ProblemKind::wdm ? "wdm" : "wsp"; })
      .def_readonly("q", &Instance::q)
      .def_readonly("p", &Instance::p)
      .def_readonly("members", &Instance::members)
      .def_property_readonly("labels",
                             [](const Instance& i) {
                               std::vector<std::string> out;
                               for (const auto& e : i.elements) out.push_back(e.label);
                               return out;
                             })
      .def_property_readonly("universe_size", &Instance::universe_size)
      .def("universe", &Instance::universe, py::arg("coord"))
      .def("validate", [](const Instance& i) { return validate(i); })
      .def("as_packing", [](const Instance& i) { return as_packing(i); })
      .def("__str__", [](const Instance& i) { return serialize_instance(i); })
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__len__", [](const Instance& i) { return i.members.size(); });

  py::class_<Solution>(m, "Solution")
      .def_readonly("picked", &Solution::picked)
      .def_readonly("total_weight", &Solution::total_weight)
      .def("__repr__", [](const Solution& s) {
        return "Solution(weight=" + std::to_string(s.total_weight) + ", picked=" +
               std::to_string(s.picked.size()) + ")";
      });

  py::class_<KernelResult>(m, "KernelResult")
      .def_readonly("kernel", &KernelResult::kernel)
      .def_readonly("member_map", &KernelResult::member_map)
      .def_readonly("element_map", &KernelResult::element_map)
      .def("lift", &lift_solution, py::arg("solution"));

  m.def("parse_instance", [](const std::string& text) { return parse_instance(text); },
        py::arg("text"));
  m.def("serialize_instance", &serialize_instance, py::arg("instance"));
  m.def("format_solution", &format_solution, py::arg("solution"));
  m.def("is_feasible_solution", &is_feasible_solution, py::arg("instance"), py::arg("solution"));

  m.def(
      "gen_random",
      [](const std::string& kind, int q, int p, std::vector<int> sizes, std::size_t m,
         std::uint64_t seed, Weight weight_lo, Weight weight_hi) {
        return gen_random(make_spec(kind, q, p, std::move(sizes), seed, weight_lo, weight_hi), m);
      },
      py::arg("kind"), py::arg("q"), py::arg("p"), py::arg("sizes"), py::arg("m"),
      py::arg("seed") = 0, py::arg("weight_lo") = 1, py::arg("weight_hi") = 1);
  m.def(
      "gen_planted",
      [](const std::string& kind, int q, int p, std::vector<int> sizes, std::size_t m_extra,
         std::uint64_t seed, Weight weight_lo, Weight weight_hi) {
        auto planted = gen_planted(
            make_spec(kind, q, p, std::move(sizes), seed, weight_lo, weight_hi), m_extra);
        return py::make_tuple(planted.instance, planted.planted_weight);
      },
      py::arg("kind"), py::arg("q"), py::arg("p"), py::arg("sizes"), py::arg("m_extra"),
      py::arg("seed") = 0, py::arg("weight_lo") = 1, py::arg("weight_hi") = 1);

  m.def(
      "solve_wdm",
      [](const Instance& inst, int threads) {
        py::gil_scoped_release release;
        return solve_wdm(inst, {threads}).solution;
      },
      py::arg("instance"), py::arg("threads") = 1);
  m.def(
      "solve_wsp",
      [](const Instance& inst, int threads) {
        py::gil_scoped_release release;
        return solve_wsp(inst, {threads}).solution;
      },
      py::arg("instance"), py::arg("threads") = 1);
  m.def(
      "solve_dm3",
      [](const Instance& inst, int threads) {
        py::gil_scoped_release release;
        return solve_dm3(inst, {threads}).solution;
      },
      py::arg("instance"), py::arg("threads") = 1);
  m.def(
      "brute_force_solve",
      [](const Instance& inst, std::uint64_t max_combinations) {
        return brute_force_solve(inst, OracleBudget{max_combinations});
      },
      py::arg("instance"), py::arg("max_combinations") = OracleBudget{}.max_combinations);

  m.def("kernelize", &kernelize, py::arg("instance"));
  m.def("kernel_bound", &kernel_bound, py::arg("q"), py::arg("p"));
  m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
  m.def("representatives", &representatives, py::arg("universe_size"), py::arg("s"), py::arg("r"),
        py::arg("family"),
        "Positions of a max r-representative subfamily of (set, weight) pairs.");
}
