// Copyright 2026 The Reprolint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REPROLINT_GRAPH_H_
#define REPROLINT_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "reprolint/app_model.h"

namespace reprolint {

// Structural fingerprint: component types, sizes and hierarchy. Labels, ids,
// positions and runtime values are excluded.
std::string Signature(const ScreenInstance& screen);

// One executed interaction with the screens around it.
struct TraceStep {
  ScreenInstance source;
  Event event;
  std::string component_id;
  ScreenInstance target;
};
using Trace = std::vector<TraceStep>;

// Depth-first ripping of `model` from launch. From each new screen it plays,
// in hierarchy order, a tap on every enabled clickable component, a long tap
// where flagged and a type with a generated numeric input, then the screen's
// component-less transitions and a back press. Stops after `budget`
// interactions.
Trace SystematicExplore(const AppModel& model, std::size_t budget);

struct Vertex {
  int id = 0;
  std::string signature;
  ScreenInstance screen;  // first screen seen with this signature
  std::string wireframe_ref;
};

struct Edge {
  int source = 0;
  int target = 0;
  EventKind event = EventKind::kTap;
  std::string component_id;
  std::string input_class;  // Type only
  std::optional<std::string> input;
  std::uint64_t exec_order = 0;

  Event event_value() const { return {event, input}; }
};

// Directed execution graph G=(V,E). Vertex 0 is the pre-launch state.
class ExecutionGraph {
 public:
  static constexpr int kStart = 0;
  static constexpr int kVersion = 1;

  ExecutionGraph();

  // Vertex with the screen's signature, created when new.
  int AddScreen(const ScreenInstance& screen);
  std::optional<int> FindVertex(const ScreenInstance& screen) const;

  // Records an interaction unless an edge with the same (source, event,
  // component, input class) exists, TapMenu counting as Tap; returns the
  // stored edge.
  const Edge& AddInteraction(int source, int target, const Event& event,
                             const std::string& component_id);
  void MergeTrace(const Trace& trace);

  // Edges from `source` with this event and component, in exec order.
  // TapMenu and Tap are interchangeable.
  std::vector<const Edge*> FindEdges(int source, EventKind event,
                                     std::string_view component_id) const;
  std::vector<const Edge*> OutEdges(int vertex) const;

  // Vertices within `depth` levels of `from` with their minimal distance,
  // ordered by distance then by the exec order of the discovering edge.
  std::vector<std::pair<int, std::size_t>> Neighborhood(int from, std::size_t depth) const;

  // Minimum-edge path; at each hop the smallest exec order that stays on a
  // shortest path wins. Throws NoPathError when `to` is unreachable.
  std::vector<Edge> ShortestPath(int from, int to) const;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(int id) const { return vertices_.at(static_cast<std::size_t>(id)); }

  nlohmann::json ToJson() const;
  // Throws ModelError on malformed or unsupported caches.
  static ExecutionGraph FromJson(const nlohmann::json& doc);
  // Sorted-key JSON; equal graphs serialize to equal bytes.
  std::string Serialize() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::uint64_t next_exec_order_ = 0;
};

}  // namespace reprolint

#endif  // REPROLINT_GRAPH_H_
