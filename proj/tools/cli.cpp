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

#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "griddom/construct.hpp"
#include "griddom/diagonal.hpp"
#include "griddom/greedy.hpp"
#include "griddom/io.hpp"
#include "griddom/oracle.hpp"
#include "griddom/render.hpp"
#include "griddom/sim.hpp"

namespace griddom::cli {
namespace {

using Json = nlohmann::ordered_json;

// Exact search beyond this many cells needs --force.
constexpr int kExactCellGuard = 36;

struct Options {
  int m = 1;
  int n = 1;
  int k = 1;
  int r = 0;
  std::string orientation = "xy";
  bool best = false;
  std::uint64_t seed = 0;
  int agents = 0;
  std::string placement = "random";
  std::string activation = "random";
  std::string tie_break = "lex";
  std::string set_path;
  std::string trace_path;
  std::string format = "json";
  std::string out_path;
  bool force = false;
  double timeout_sec = 0;
};

// Usage problems found after flag parsing (bad files, bad combinations).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void add_grid(CLI::App* cmd, bool with_k = true) {
    cmd->add_option("--m", o_.m, "grid width")
        ->required()
        ->check(CLI::Range(1, 100000));
    cmd->add_option("--n", o_.n, "grid height")
        ->required()
        ->check(CLI::Range(1, 100000));
    if (with_k) {
      cmd->add_option("--k", o_.k, "domination distance")
          ->check(CLI::Range(1, 1000));
    }
  }
  void add_output(CLI::App* cmd) {
    cmd->add_option("--format", o_.format, "json, ascii or svg")
        ->check(CLI::IsMember({"json", "ascii", "svg"}));
    cmd->add_option("--out", o_.out_path, "write the result to FILE");
  }
  CLI::Option* add_seed(CLI::App* cmd) {
    return cmd->add_option("--seed", o_.seed, "random seed");
  }

  std::uint64_t resolve_seed(const CLI::Option* opt) const {
    if (opt->count() > 0) return o_.seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }

  void emit(const std::string& text) {
    if (o_.out_path.empty()) {
      out_ << text;
    } else {
      write_text_file(o_.out_path, text);
    }
  }
  void emit_doc(const SetDocument& doc) {
    if (o_.format == "json") {
      emit(to_json(doc) + "\n");
    } else if (o_.format == "ascii") {
      emit(render(doc.grid(), doc, RenderStyle::kAscii) + "\n");
    } else {
      emit(render(doc.grid(), doc, RenderStyle::kSvg));
    }
  }
  SetDocument load_set() const {
    try {
      return parse_set_document(read_text_file(o_.set_path));
    } catch (const ParseError& e) {
      throw UsageError(o_.set_path + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }

  int cmd_construct();
  int cmd_simulate(const CLI::Option* seed_opt);
  int cmd_exact();
  int cmd_greedy(const CLI::Option* seed_opt);
  int cmd_verify();
  int cmd_bounds();
  int cmd_render();

  ExplicitPlacement load_placement() const;
  FixedActivation parse_activation() const;

  std::ostream& out_;
  std::ostream& err_;
  Options o_;
  CLI::Option* verify_k_opt_ = nullptr;
};

int Cli::cmd_construct() {
  const GridSpec g(o_.m, o_.n);
  const ConstructionResult c =
      o_.best ? construct_best(g, o_.k)
              : construct(g, {o_.k, o_.r, orientation_from_string(o_.orientation)});
  const BoundsReport b = bounds(g, o_.k);

  SetDocument doc{o_.m, o_.n, o_.k, c.dominating_set, Json::object()};
  doc.meta["method"] = o_.best ? "construct_best" : "construct";
  doc.meta["params"] = {{"k", c.params.k},
                        {"r", c.params.r},
                        {"orientation", to_string(c.params.orientation)}};
  doc.meta["size"] = c.dominating_set.size();
  doc.meta["bound"] = b.construction_upper;
  if (b.gamma_exact_formula) {
    doc.meta["gap"] =
        static_cast<std::int64_t>(c.dominating_set.size()) -
        *b.gamma_exact_formula;
  }
  doc.meta["orphans"] = vertices_json(c.orphan_part);
  doc.meta["repaired"] = vertices_json(c.repaired);
  emit_doc(doc);

  err_ << "construct: size " << c.dominating_set.size() << ", bound "
       << b.construction_upper;
  if (b.gamma_exact_formula) {
    err_ << ", gap to gamma " << doc.meta["gap"].get<std::int64_t>();
  }
  err_ << '\n';
  return kExitOk;
}

ExplicitPlacement Cli::load_placement() const {
  // Either a bare [[x,y],...] array or {"positions": [[x,y],...]}.
  Json j;
  try {
    j = Json::parse(read_text_file(o_.placement));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(o_.placement + ": invalid JSON: " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  if (j.is_object() && j.contains("positions")) j = j["positions"];
  if (!j.is_array()) throw UsageError(o_.placement + ": expected an array");
  ExplicitPlacement p;
  for (const Json& v : j) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
        !v[1].is_number_integer()) {
      throw UsageError(o_.placement + ": bad position " + v.dump());
    }
    p.positions.push_back({v[0].get<int>(), v[1].get<int>()});
  }
  return p;
}

FixedActivation Cli::parse_activation() const {
  FixedActivation a;
  if (o_.activation == "sequential") {
    for (int i = 0; i < o_.agents; ++i) a.order.push_back(i);
    return a;
  }
  std::stringstream ss(o_.activation);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      a.order.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--activation expects random, sequential or a comma "
                       "separated id list, got '" + o_.activation + "'");
    }
  }
  return a;
}

int Cli::cmd_simulate(const CLI::Option* seed_opt) {
  const GridSpec g(o_.m, o_.n);
  const std::uint64_t seed = resolve_seed(seed_opt);
  SimConfig cfg;
  cfg.grid = g;
  cfg.k = o_.k;
  cfg.agent_count =
      o_.agents > 0 ? o_.agents
                    : static_cast<int>(bounds(g, o_.k).construction_upper);
  o_.agents = cfg.agent_count;
  if (o_.placement == "random") {
    cfg.placement = RandomPlacement{seed};
  } else {
    cfg.placement = load_placement();
  }
  if (o_.activation == "random") {
    cfg.activation = RandomActivation{seed};
  } else {
    cfg.activation = parse_activation();
  }

  const SimRun result = griddom::run(cfg);
  const SimState& s = result.final_state;
  if (!o_.trace_path.empty()) {
    write_text_file(o_.trace_path, trace_to_jsonl(result.events));
  }

  int never_activated = 0;
  for (const Agent& a : s.agents) never_activated += !a.activated;
  SetDocument doc{o_.m, o_.n, o_.k, placed_vertices(s), Json::object()};
  doc.meta["method"] = "simulate";
  doc.meta["params"] = {{"k", o_.k},
                        {"agents", cfg.agent_count},
                        {"placement", o_.placement},
                        {"activation", o_.activation}};
  doc.meta["seed"] = seed;
  doc.meta["orphans"] = vertices_json(s.orphan_occupied);
  doc.meta["dominated"] = result.dominated;
  doc.meta["settled"] = result.settled_count;
  doc.meta["never_activated"] = never_activated;
  doc.meta["epochs"] = s.epoch;
  doc.meta["move_steps"] = s.move_steps;
  doc.meta["halt_reason"] = s.halt_reason;
  emit_doc(doc);

  err_ << "simulate: " << (result.dominated ? "dominated" : "NOT dominated")
       << ", " << result.settled_count << " of " << cfg.agent_count
       << " agents settled, halted on " << s.halt_reason << ", seed " << seed
       << '\n';
  return result.dominated ? kExitOk : kExitFailed;
}

int Cli::cmd_exact() {
  const GridSpec g(o_.m, o_.n);
  if (static_cast<std::int64_t>(o_.m) * o_.n > kExactCellGuard && !o_.force) {
    throw UsageError("exact search on " + std::to_string(o_.m) + "x" +
                     std::to_string(o_.n) + " may take very long; pass "
                     "--force to run it anyway");
  }
  SearchBudget budget;
  if (o_.timeout_sec > 0) {
    budget.time_limit = std::chrono::milliseconds(
        static_cast<std::int64_t>(o_.timeout_sec * 1000));
  }
  try {
    const OracleResult r = exact_min_dominating(g, o_.k, budget);
    SetDocument doc{o_.m, o_.n, o_.k, r.optimum, Json::object()};
    doc.meta["method"] = "exact";
    doc.meta["gamma"] = r.gamma;
    doc.meta["nodes"] = r.nodes_explored;
    emit_doc(doc);
    err_ << "exact: gamma " << r.gamma << " (" << r.nodes_explored
         << " nodes, "
         << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed)
                .count()
         << " ms)\n";
    return kExitOk;
  } catch (const BudgetExhausted& e) {
    err_ << "exact: budget exhausted; gamma in [" << e.proven_lower_bound()
         << ", " << e.best_upper_bound() << "]\n";
    return kExitBudget;
  }
}

int Cli::cmd_greedy(const CLI::Option* seed_opt) {
  const GridSpec g(o_.m, o_.n);
  GreedyConfig cfg{tie_break_from_string(o_.tie_break), std::nullopt};
  if (cfg.tie_break == TieBreak::kRandom) cfg.seed = resolve_seed(seed_opt);
  const VertexSet s = greedy_dominate(g, cfg);

  SetDocument doc{o_.m, o_.n, 1, s, Json::object()};
  doc.meta["method"] = "greedy";
  doc.meta["params"] = {{"tie_break", o_.tie_break}};
  if (cfg.seed) doc.meta["seed"] = *cfg.seed;
  doc.meta["size"] = s.size();
  doc.meta["worst_case_formula"] = greedy_worst_case_formula(o_.m, o_.n);
  emit_doc(doc);
  err_ << "greedy: size " << s.size() << '\n';
  return kExitOk;
}

int Cli::cmd_verify() {
  SetDocument doc = load_set();
  const int k = verify_k_opt_->count() > 0 ? o_.k : doc.k;
  const DominationReport rep = verify_k_domination(doc.grid(), doc.vertices, k);
  Json j;
  j["dominated"] = rep.dominated;
  j["size"] = doc.vertices.size();
  j["k"] = k;
  j["uncovered"] = vertices_json(rep.uncovered);
  Json hist = Json::object();
  for (const auto& [times, count] : rep.histogram) {
    hist[std::to_string(times)] = count;
  }
  j["coverage_histogram"] = std::move(hist);
  emit(j.dump() + "\n");
  return rep.dominated ? kExitOk : kExitFailed;
}

int Cli::cmd_bounds() {
  const BoundsReport b = bounds(GridSpec(o_.m, o_.n), o_.k);
  Json j;
  j["m"] = o_.m;
  j["n"] = o_.n;
  j["k"] = o_.k;
  j["lower"] = b.lower;
  j["construction_upper"] = b.construction_upper;
  j["diag_cardinality_upper"] = b.diag_cardinality_upper;
  j["ratio_upper"] = b.ratio_upper.str();
  if (b.gamma_exact_formula) j["gamma_exact_formula"] = *b.gamma_exact_formula;
  emit(j.dump() + "\n");
  return kExitOk;
}

int Cli::cmd_render() {
  const SetDocument doc = load_set();
  if (o_.format == "svg") {
    emit(render(doc.grid(), doc, RenderStyle::kSvg));
  } else {
    emit(render(doc.grid(), doc, RenderStyle::kAscii) + "\n");
  }
  return kExitOk;
}

int Cli::run(const std::vector<std::string>& args) {
  CLI::App app{"Dominating sets on grid graphs", "griddom"};
  app.require_subcommand(1);

  auto* construct_cmd =
      app.add_subcommand("construct", "diagonal construction with bound report");
  add_grid(construct_cmd);
  construct_cmd->add_option("--r", o_.r, "residue (super-grid coordinates)")
      ->check(CLI::NonNegativeNumber);
  construct_cmd->add_option("--orientation", o_.orientation, "xy or swapped")
      ->check(CLI::IsMember({"xy", "swapped"}));
  construct_cmd->add_flag("--best", o_.best, "try every residue and orientation");
  add_output(construct_cmd);

  auto* simulate_cmd =
      app.add_subcommand("simulate", "run the distributed agent protocol");
  add_grid(simulate_cmd);
  auto* sim_seed = add_seed(simulate_cmd);
  simulate_cmd
      ->add_option("--agents", o_.agents,
                   "agent count (default: the construction bound)")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--placement", o_.placement,
                           "random, or a JSON file of [x,y] positions");
  simulate_cmd->add_option("--activation", o_.activation,
                           "random, sequential, or ids like 3,0,2");
  simulate_cmd->add_option("--trace", o_.trace_path, "write a JSONL trace");
  add_output(simulate_cmd);

  auto* exact_cmd = app.add_subcommand("exact", "exact minimum dominating set");
  add_grid(exact_cmd);
  exact_cmd->add_flag("--force", o_.force, "lift the grid size guard");
  exact_cmd->add_option("--timeout-sec", o_.timeout_sec, "search time limit")
      ->check(CLI::PositiveNumber);
  add_output(exact_cmd);

  auto* greedy_cmd = app.add_subcommand("greedy", "greedy domination (k = 1)");
  add_grid(greedy_cmd, false);
  greedy_cmd->add_option("--tie-break", o_.tie_break, "lex, random, adversarial")
      ->check(CLI::IsMember({"lex", "random", "adversarial"}));
  auto* greedy_seed = add_seed(greedy_cmd);
  add_output(greedy_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check a set document");
  verify_cmd->add_option("--set", o_.set_path, "set document")->required();
  verify_k_opt_ = verify_cmd->add_option("--k", o_.k, "override the document's k")
               ->check(CLI::Range(1, 1000));
  verify_cmd->add_option("--out", o_.out_path, "write the report to FILE");

  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds");
  add_grid(bounds_cmd);
  bounds_cmd->add_option("--out", o_.out_path, "write the report to FILE");

  auto* render_cmd = app.add_subcommand("render", "draw a set document");
  render_cmd->add_option("--set", o_.set_path, "set document")->required();
  render_cmd->add_option("--format", o_.format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--out", o_.out_path, "write the picture to FILE");

  std::vector<const char*> argv{"griddom"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct_cmd) return cmd_construct();
    if (*simulate_cmd) return cmd_simulate(sim_seed);
    if (*exact_cmd) return cmd_exact();
    if (*greedy_cmd) return cmd_greedy(greedy_seed);
    if (*verify_cmd) return cmd_verify();
    if (*bounds_cmd) return cmd_bounds();
    if (*render_cmd) return cmd_render();
  } catch (const UsageError& e) {
    err_ << "griddom: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err_ << "griddom: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err_ << "griddom: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    // File system trouble while writing output or traces.
    err_ << "griddom: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Cli cli(out, err);
  return cli.run(args);
}

}  // namespace griddom::cli
