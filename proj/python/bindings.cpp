// Copyright 2026 The griddom Authors.
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

// Python bindings. Vertices cross the boundary as (x, y) tuples and sets as
// sorted lists of them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "griddom/construct.hpp"
#include "griddom/diagonal.hpp"
#include "griddom/greedy.hpp"
#include "griddom/io.hpp"
#include "griddom/oracle.hpp"
#include "griddom/render.hpp"
#include "griddom/sim.hpp"

namespace py = pybind11;
using namespace griddom;

namespace {

using Pair = std::pair<int, int>;

std::vector<Pair> to_pairs(const VertexSet& s) {
  std::vector<Pair> out;
  out.reserve(s.size());
  for (Vertex v : s) out.emplace_back(v.x, v.y);
  return out;
}

VertexSet from_pairs(const std::vector<Pair>& pairs) {
  std::vector<Vertex> out;
  out.reserve(pairs.size());
  for (auto [x, y] : pairs) out.push_back({x, y});
  return VertexSet(std::move(out));
}

py::dict construction_dict(const ConstructionResult& c) {
  py::dict d;
  d["vertices"] = to_pairs(c.dominating_set);
  d["cluster_part"] = to_pairs(c.cluster_part);
  d["orphan_part"] = to_pairs(c.orphan_part);
  d["repaired"] = to_pairs(c.repaired);
  d["k"] = c.params.k;
  d["r"] = c.params.r;
  d["orientation"] = std::string(to_string(c.params.orientation));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dominating sets on grid graphs";

  py::exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);
  py::register_exception<FormulaNotApplicable>(m, "FormulaNotApplicable",
                                              PyExc_ValueError);

  m.def(
      "diagonalize",
      [](int mm, int n, int k, int r, const std::string& orientation) {
        return to_pairs(diagonalize(
            GridSpec(mm, n), {k, r, orientation_from_string(orientation)}));
      },
      py::arg("m"), py::arg("n"), py::arg("k") = 1, py::arg("r") = 0,
      py::arg("orientation") = "xy");

  m.def(
      "construct",
      [](int mm, int n, int k, int r, const std::string& orientation) {
        return construction_dict(construct(
            GridSpec(mm, n), {k, r, orientation_from_string(orientation)}));
      },
      py::arg("m"), py::arg("n"), py::arg("k") = 1, py::arg("r") = 0,
      py::arg("orientation") = "xy");

  m.def(
      "construct_best",
      [](int mm, int n, int k) {
        return construction_dict(construct_best(GridSpec(mm, n), k));
      },
      py::arg("m"), py::arg("n"), py::arg("k") = 1);

  m.def(
      "verify",
      [](int mm, int n, const std::vector<Pair>& vertices, int k) {
        const DominationReport r =
            verify_k_domination(GridSpec(mm, n), from_pairs(vertices), k);
        py::dict d;
        d["dominated"] = r.dominated;
        d["uncovered"] = to_pairs(r.uncovered);
        d["histogram"] = r.histogram;
        return d;
      },
      py::arg("m"), py::arg("n"), py::arg("vertices"), py::arg("k") = 1);

  m.def(
      "bounds",
      [](int mm, int n, int k) {
        const BoundsReport b = bounds(GridSpec(mm, n), k);
        py::dict d;
        d["lower"] = b.lower;
        d["construction_upper"] = b.construction_upper;
        d["diag_cardinality_upper"] = b.diag_cardinality_upper;
        d["ratio_upper"] = std::pair(b.ratio_upper.num(), b.ratio_upper.den());
        d["gamma_exact_formula"] = b.gamma_exact_formula;
        return d;
      },
      py::arg("m"), py::arg("n"), py::arg("k") = 1);

  m.def("gamma_formula", &gamma_formula, py::arg("m"), py::arg("n"));

  m.def(
      "exact",
      [](int mm, int n, int k, std::optional<std::uint64_t> max_nodes,
         std::optional<double> time_limit_sec) {
        SearchBudget budget;
        budget.max_nodes = max_nodes;
        if (time_limit_sec) {
          budget.time_limit = std::chrono::milliseconds(
              static_cast<std::int64_t>(*time_limit_sec * 1000));
        }
        try {
          OracleResult r;
          {
            py::gil_scoped_release release;
            r = exact_min_dominating(GridSpec(mm, n), k, budget);
          }
          py::dict d;
          d["gamma"] = r.gamma;
          d["vertices"] = to_pairs(r.optimum);
          d["nodes"] = r.nodes_explored;
          return d;
        } catch (const BudgetExhausted& e) {
          py::object type =
              py::module_::import("griddom._core").attr("BudgetExhausted");
          py::object exc = type(e.what());
          exc.attr("best_upper_bound") = e.best_upper_bound();
          exc.attr("proven_lower_bound") = e.proven_lower_bound();
          PyErr_SetObject(type.ptr(), exc.ptr());
          throw py::error_already_set();
        }
      },
      py::arg("m"), py::arg("n"), py::arg("k") = 1,
      py::arg("max_nodes") = py::none(), py::arg("time_limit_sec") = py::none());

  m.def(
      "greedy",
      [](int mm, int n, const std::string& tie_break,
         std::optional<std::uint64_t> seed) {
        return to_pairs(greedy_dominate(
            GridSpec(mm, n), {tie_break_from_string(tie_break), seed}));
      },
      py::arg("m"), py::arg("n"), py::arg("tie_break") = "lex",
      py::arg("seed") = py::none());

  m.def("greedy_worst_case_formula", &greedy_worst_case_formula, py::arg("m"),
        py::arg("n"));

  m.def(
      "simulate",
      [](int mm, int n, int agents, int k, std::uint64_t seed,
         bool relay_orphan_slots) {
        SimConfig cfg;
        cfg.grid = GridSpec(mm, n);
        cfg.k = k;
        cfg.agent_count = agents;
        cfg.placement = RandomPlacement{seed};
        cfg.activation = RandomActivation{seed};
        cfg.relay_orphan_slots = relay_orphan_slots;
        const SimRun r = run(cfg);
        py::dict d;
        d["dominated"] = r.dominated;
        d["settled_count"] = r.settled_count;
        d["cluster"] = to_pairs(r.final_state.cluster);
        d["orphans"] = to_pairs(r.final_state.orphan_occupied);
        d["move_steps"] = r.final_state.move_steps;
        d["halt_reason"] = r.final_state.halt_reason;
        d["trace"] = trace_to_jsonl(r.events);
        return d;
      },
      py::arg("m"), py::arg("n"), py::arg("agents"), py::arg("k") = 1,
      py::arg("seed") = 0, py::arg("relay_orphan_slots") = true);

  m.def(
      "render",
      [](int mm, int n, const std::vector<Pair>& vertices, int k,
         const std::string& style) {
        SetDocument doc{mm, n, k, from_pairs(vertices), {}};
        return render(doc.grid(), doc, render_style_from_string(style));
      },
      py::arg("m"), py::arg("n"), py::arg("vertices"), py::arg("k") = 1,
      py::arg("style") = "ascii");
}
