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

#include "griddom/sim.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

#include "griddom/construct.hpp"
#include "griddom/diagonal.hpp"
#include "random_index.hpp"

namespace griddom {

std::string_view to_string(AgentMode mode) {
  switch (mode) {
    case AgentMode::kSleep:
      return "sleep";
    case AgentMode::kActive:
      return "active";
    case AgentMode::kSettled:
      return "settled";
  }
  return "sleep";
}

std::string_view to_string(SettledKind kind) {
  return kind == SettledKind::kCluster ? "cluster" : "orphan";
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kActivated:
      return "ACTIVATED";
    case EventKind::kNoSettledFound:
      return "NO_SETTLED_FOUND";
    case EventKind::kSettledFirst:
      return "SETTLED_FIRST";
    case EventKind::kMoved:
      return "MOVED";
    case EventKind::kSettledCluster:
      return "SETTLED_CLUSTER";
    case EventKind::kSettledOrphan:
      return "SETTLED_ORPHAN";
    case EventKind::kVslotsUpdated:
      return "VSLOTS_UPDATED";
    case EventKind::kWentToSleep:
      return "WENT_TO_SLEEP";
    case EventKind::kHalted:
      return "HALTED";
    case EventKind::kLeftGrid:
      return "LEFT_GRID";
  }
  return "HALTED";
}

std::array<Vertex, 4> connection_offsets(int k) {
  return {Vertex{k, k + 1}, Vertex{k + 1, -k}, Vertex{-k, -k - 1},
          Vertex{-k - 1, k}};
}

bool module_connectable(Vertex c1, Vertex c2, int k) {
  const Vertex d{c2.x - c1.x, c2.y - c1.y};
  for (Vertex off : connection_offsets(k)) {
    if (off == d) return true;
  }
  return false;
}

namespace {

bool in_super_grid(const GridSpec& g, Vertex v, int k) {
  return v.x >= 1 - k && v.x <= g.m() + k && v.y >= 1 - k && v.y <= g.n() + k;
}

VertexSet slots_around(const SimState& s, Vertex center) {
  const int k = s.config.k;
  std::vector<Vertex> out;
  for (Vertex off : connection_offsets(k)) {
    const Vertex v{center.x + off.x, center.y + off.y};
    if (!in_super_grid(s.config.grid, v, k)) continue;
    if (s.cluster.contains(v) || s.virtual_centers.contains(v)) continue;
    out.push_back(v);
  }
  return VertexSet(std::move(out));
}

std::optional<Vertex> valid_image(const SimState& s, Vertex slot) {
  const GridSpec& g = s.config.grid;
  std::optional<Vertex> image =
      g.contains(slot) ? std::optional(slot)
                       : nearest_in_grid(g, slot, s.config.k);
  if (!image) return std::nullopt;
  if (s.cluster.contains(*image) || s.orphan_occupied.contains(*image)) {
    return std::nullopt;
  }
  return image;
}

VertexSet valid_slots_around(const SimState& s, Vertex center) {
  std::vector<Vertex> out;
  for (Vertex slot : slots_around(s, center)) {
    if (auto image = valid_image(s, slot)) out.push_back(*image);
  }
  return VertexSet(std::move(out));
}

void require_cluster_agent(const Agent& a) {
  if (a.settled_kind != SettledKind::kCluster) {
    throw std::logic_error("slots are only defined for cluster agents");
  }
}

bool is_relay_host(const SimState& s, const Agent& a) {
  return s.config.relay_orphan_slots &&
         a.settled_kind == SettledKind::kOrphan && a.module_center;
}

struct Host {
  int id;
  Vertex center;
  VertexSet vslots;
};

// Awake cluster agents first; relay hosts only when none of those has slots.
std::vector<Host> candidate_hosts(const SimState& s) {
  std::vector<Host> hosts;
  for (int id : s.settled_roster) {
    const Agent& a = s.agents[id];
    if (a.settled_kind == SettledKind::kCluster && !a.done &&
        !a.vslots.empty()) {
      hosts.push_back({id, *a.module_center, a.vslots});
    }
  }
  if (!hosts.empty()) return hosts;
  for (int id : s.settled_roster) {
    const Agent& a = s.agents[id];
    if (!is_relay_host(s, a)) continue;
    VertexSet vs = valid_slots_around(s, *a.module_center);
    if (!vs.empty()) hosts.push_back({id, *a.module_center, std::move(vs)});
  }
  return hosts;
}

std::vector<int> activation_order(const SimConfig& cfg) {
  const int count = cfg.agent_count;
  if (const auto* fixed = std::get_if<FixedActivation>(&cfg.activation)) {
    std::vector<char> seen(count, 0);
    for (int id : fixed->order) {
      if (id < 0 || id >= count) {
        throw std::invalid_argument("activation id " + std::to_string(id) +
                                    " out of range");
      }
      if (seen[id]) {
        throw std::invalid_argument("activation id " + std::to_string(id) +
                                    " repeated");
      }
      seen[id] = 1;
    }
    return fixed->order;
  }
  const auto seed = std::get<RandomActivation>(cfg.activation).seed;
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 1u};
  std::mt19937_64 rng(seq);
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[internal::uniform_index(rng, i)]);
  }
  return order;
}

std::vector<Vertex> initial_positions(const SimConfig& cfg) {
  const GridSpec& g = cfg.grid;
  if (const auto* exp = std::get_if<ExplicitPlacement>(&cfg.placement)) {
    if (static_cast<int>(exp->positions.size()) != cfg.agent_count) {
      throw std::invalid_argument("explicit placement lists " +
                                  std::to_string(exp->positions.size()) +
                                  " positions for " +
                                  std::to_string(cfg.agent_count) + " agents");
    }
    for (Vertex v : exp->positions) {
      if (!g.contains(v)) {
        throw std::invalid_argument("placement outside the grid");
      }
    }
    return exp->positions;
  }
  const auto seed = std::get<RandomPlacement>(cfg.placement).seed;
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0u};
  std::mt19937_64 rng(seq);
  std::vector<Vertex> out;
  out.reserve(cfg.agent_count);
  for (int i = 0; i < cfg.agent_count; ++i) {
    out.push_back(g.vertex_at(internal::uniform_index(rng, g.vertex_count())));
  }
  return out;
}

}  // namespace

VertexSet slots_of(const SimState& state, const Agent& agent) {
  require_cluster_agent(agent);
  return slots_around(state, agent.pos);
}

VertexSet valid_slots_of(const SimState& state, const Agent& agent) {
  require_cluster_agent(agent);
  return valid_slots_around(state, agent.pos);
}

SimState init_sim(const SimConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("k must be positive");
  if (cfg.agent_count < 1) {
    throw std::invalid_argument("agent_count must be positive");
  }
  if (cfg.max_epochs && *cfg.max_epochs < 1) {
    throw std::invalid_argument("max_epochs must be positive");
  }
  SimState s;
  s.config = cfg;
  const std::vector<Vertex> positions = initial_positions(cfg);
  s.agents.resize(cfg.agent_count);
  for (int i = 0; i < cfg.agent_count; ++i) {
    s.agents[i].id = i;
    s.agents[i].pos = positions[i];
  }
  s.activation_order = activation_order(cfg);
  return s;
}

std::pair<SimState, std::vector<SimEvent>> step_epoch(SimState s) {
  if (s.halted) throw std::logic_error("simulation already halted");
  if (s.next_activation >= s.activation_order.size()) {
    throw std::logic_error("no agent left to activate");
  }
  const int k = s.config.k;
  const std::int64_t epoch = ++s.epoch;
  std::vector<SimEvent> events;
  auto emit = [&](EventKind kind, int agent) -> SimEvent& {
    SimEvent e;
    e.epoch = epoch;
    e.kind = kind;
    e.agent = agent;
    events.push_back(std::move(e));
    return events.back();
  };

  const int id = s.activation_order[s.next_activation++];
  Agent& a = s.agents[id];
  a.mode = AgentMode::kActive;
  a.activated = true;
  emit(EventKind::kActivated, id).pos = a.pos;

  if (s.settled_roster.empty()) {
    emit(EventKind::kNoSettledFound, id);
    a.mode = AgentMode::kSettled;
    a.settled_kind = SettledKind::kCluster;
    a.module_center = a.pos;
    s.cluster.insert(a.pos);
    s.settled_roster.push_back(id);
    emit(EventKind::kSettledFirst, id).pos = a.pos;
  } else {
    std::vector<Host> hosts = candidate_hosts(s);
    // The previous epoch only ends without halting if some host has slots.
    if (hosts.empty()) throw std::logic_error("no host with valid slots");
    const Vertex from = a.pos;
    const auto host_key = [&](const Host& h) {
      const Vertex hp = s.agents[h.id].pos;
      return std::tuple(manhattan_distance(from, hp), hp, h.id);
    };
    const Host& host = *std::min_element(
        hosts.begin(), hosts.end(),
        [&](const Host& l, const Host& r) { return host_key(l) < host_key(r); });
    Vertex target = *host.vslots.begin();
    for (Vertex v : host.vslots) {
      if (manhattan_distance(from, v) < manhattan_distance(from, target)) {
        target = v;
      }
    }
    const int path = manhattan_distance(from, target);
    s.move_steps += path;
    a.pos = target;
    SimEvent& moved = emit(EventKind::kMoved, id);
    moved.pos = target;
    moved.path_len = path;
    moved.host = host.id;
    moved.from = from;

    a.mode = AgentMode::kSettled;
    s.settled_roster.push_back(id);
    if (module_connectable(host.center, target, k)) {
      a.settled_kind = SettledKind::kCluster;
      a.module_center = target;
      s.cluster.insert(target);
      emit(EventKind::kSettledCluster, id).pos = target;
    } else {
      a.settled_kind = SettledKind::kOrphan;
      // Every out-of-grid slot of the host that lands on this vertex is now
      // represented by the agent.
      for (Vertex slot : slots_around(s, host.center)) {
        if (s.config.grid.contains(slot)) continue;
        if (nearest_in_grid(s.config.grid, slot, k) != target) continue;
        if (!a.module_center) a.module_center = slot;
        s.virtual_centers.insert(slot);
      }
      s.orphan_occupied.insert(target);
      emit(EventKind::kSettledOrphan, id).pos = target;
      a.mode = AgentMode::kSleep;
      a.done = true;
      emit(EventKind::kWentToSleep, id).pos = target;
    }
  }

  for (int sid : s.settled_roster) {
    Agent& b = s.agents[sid];
    if (b.settled_kind != SettledKind::kCluster || b.done) continue;
    VertexSet vs = valid_slots_around(s, b.pos);
    if (vs != b.vslots) {
      b.vslots = std::move(vs);
      SimEvent& e = emit(EventKind::kVslotsUpdated, sid);
      e.pos = b.pos;
      e.slots = b.vslots.elements();
    }
    if (b.vslots.empty()) {
      b.mode = AgentMode::kSleep;
      b.done = true;
      emit(EventKind::kWentToSleep, sid).pos = b.pos;
    }
  }

  std::string reason;
  if (candidate_hosts(s).empty()) {
    reason = "no_valid_slots";
  } else if (s.next_activation >= s.activation_order.size()) {
    reason = "agents_exhausted";
  } else if (s.config.max_epochs && epoch >= *s.config.max_epochs) {
    reason = "max_epochs";
  }
  if (!reason.empty()) {
    s.halted = true;
    s.halt_reason = reason;
    emit(EventKind::kHalted, -1).reason = reason;
    if (reason == "no_valid_slots") {
      for (std::size_t i = s.next_activation; i < s.activation_order.size();
           ++i) {
        Agent& left = s.agents[s.activation_order[i]];
        left.left_grid = true;
        emit(EventKind::kLeftGrid, left.id).pos = left.pos;
      }
    }
  }
  return {std::move(s), std::move(events)};
}

VertexSet placed_vertices(const SimState& state) {
  return state.cluster.united(state.orphan_occupied);
}

SimRun run(const SimConfig& cfg) {
  SimRun result;
  SimState s = init_sim(cfg);
  if (s.activation_order.empty()) {
    s.halted = true;
    s.halt_reason = "agents_exhausted";
    SimEvent e;
    e.kind = EventKind::kHalted;
    e.reason = s.halt_reason;
    result.events.push_back(std::move(e));
  }
  while (!s.halted) {
    auto [next, events] = step_epoch(std::move(s));
    s = std::move(next);
    result.events.insert(result.events.end(),
                         std::make_move_iterator(events.begin()),
                         std::make_move_iterator(events.end()));
  }
  result.settled_count = static_cast<int>(s.settled_roster.size());
  result.dominated =
      verify_k_domination(cfg.grid, placed_vertices(s), cfg.k).dominated;
  result.final_state = std::move(s);
  return result;
}

}  // namespace griddom
