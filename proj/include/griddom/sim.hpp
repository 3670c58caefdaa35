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

// Deterministic epoch-by-epoch simulation of the distributed grid domination
// protocol.
//
// Agents start asleep at arbitrary vertices. Each epoch wakes exactly one
// never-activated agent. The first one settles where it stands and seeds the
// cluster. Every later one walks (x first, then y) to the closest valid slot
// of the closest settled agent that still has valid slots, settles there,
// and joins the cluster if it satisfies the module connection condition with
// its host, or occupies an orphan and sleeps otherwise. Cluster agents whose
// valid slots run out go to sleep. When no settled agent has a valid slot
// the run halts and every agent not yet placed leaves the grid.
//
// Slots are the four connection offsets of a module center, restricted to
// the k-super-grid and excluding existing module centers. A valid slot is an
// in-grid slot, or the nearest grid vertex (within k) of an out-of-grid one.
//
// An out-of-grid slot that an orphan agent stands in for becomes a virtual
// module center. With `relay_orphan_slots` set, the slots of these virtual
// centers are offered once no cluster agent has valid slots left. That only
// matters on grids at most 2k wide, where the in-grid part of a residue class
// is not connected under the connection offsets and the cluster would stall.

#ifndef GRIDDOM_SIM_HPP_
#define GRIDDOM_SIM_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "griddom/grid.hpp"

namespace griddom {

enum class AgentMode { kSleep, kActive, kSettled };
enum class SettledKind { kCluster, kOrphan };

std::string_view to_string(AgentMode mode);
std::string_view to_string(SettledKind kind);

struct Agent {
  int id = 0;
  AgentMode mode = AgentMode::kSleep;
  bool done = false;  // settled earlier and now asleep for good
  Vertex pos;
  std::optional<SettledKind> settled_kind;
  bool activated = false;
  bool left_grid = false;
  // Cluster agents: pos. Orphan agents: the out-of-grid slot they replace.
  std::optional<Vertex> module_center;
  VertexSet vslots;  // last broadcast valid slots (cluster agents)
};

struct RandomPlacement {
  std::uint64_t seed = 0;
};
struct ExplicitPlacement {
  std::vector<Vertex> positions;  // one per agent; duplicates allowed
};
using Placement = std::variant<RandomPlacement, ExplicitPlacement>;

struct RandomActivation {
  std::uint64_t seed = 0;
};
struct FixedActivation {
  std::vector<int> order;  // distinct agent ids; unlisted agents never wake
};
using Activation = std::variant<RandomActivation, FixedActivation>;

struct SimConfig {
  GridSpec grid{1, 1};
  int k = 1;
  int agent_count = 1;
  Placement placement = RandomPlacement{};
  Activation activation = RandomActivation{};
  std::optional<std::int64_t> max_epochs;
  bool relay_orphan_slots = true;
};

enum class EventKind {
  kActivated,
  kNoSettledFound,
  kSettledFirst,
  kMoved,
  kSettledCluster,
  kSettledOrphan,
  kVslotsUpdated,
  kWentToSleep,
  kHalted,
  kLeftGrid,
};

std::string_view to_string(EventKind kind);

struct SimEvent {
  std::int64_t epoch = 0;
  EventKind kind = EventKind::kActivated;
  int agent = -1;  // -1 for run-level events
  std::optional<Vertex> pos;
  std::optional<int> path_len;
  // Detail fields; empty/unset when not applicable.
  std::optional<int> host;
  std::optional<Vertex> from;
  std::vector<Vertex> slots;
  std::string reason;

  friend bool operator==(const SimEvent&, const SimEvent&) = default;
};

struct SimState {
  SimConfig config;
  std::vector<Agent> agents;
  VertexSet cluster;           // C
  VertexSet orphan_occupied;   // P
  VertexSet virtual_centers;   // out-of-grid slots represented in P
  std::vector<int> settled_roster;  // A_s, in settling order
  std::vector<int> activation_order;
  std::size_t next_activation = 0;
  std::int64_t epoch = 0;
  std::int64_t move_steps = 0;
  bool halted = false;
  std::string halt_reason;
};

// The four module connection offsets (+k,+k+1), (+k+1,-k), (-k,-k-1),
// (-k-1,+k).
std::array<Vertex, 4> connection_offsets(int k);

// True iff c2 - c1 is a connection offset. Symmetric.
bool module_connectable(Vertex c1, Vertex c2, int k);

// Connection offsets around a cluster agent that lie in the k-super-grid and
// are not module centers yet (grid coordinates; may be outside the grid).
// Throws std::logic_error unless the agent is settled in the cluster.
VertexSet slots_of(const SimState& state, const Agent& agent);

// In-grid slots plus the nearest grid vertex of each out-of-grid slot,
// excluding C and P. Same precondition as slots_of.
VertexSet valid_slots_of(const SimState& state, const Agent& agent);

// Throws std::invalid_argument for bad placements or activation orders.
SimState init_sim(const SimConfig& cfg);

// Runs one epoch. Throws std::logic_error if the state has already halted.
std::pair<SimState, std::vector<SimEvent>> step_epoch(SimState state);

struct SimRun {
  SimState final_state;
  std::vector<SimEvent> events;
  bool dominated = false;
  int settled_count = 0;
};

SimRun run(const SimConfig& cfg);

// C ∪ P.
VertexSet placed_vertices(const SimState& state);

}  // namespace griddom

#endif  // GRIDDOM_SIM_HPP_
