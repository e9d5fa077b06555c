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

#include "reprolint/graph.h"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.h"
#include "reprolint/device.h"
#include "reprolint/error.h"

namespace reprolint {
namespace {

const char* kFixture = REPROLINT_DATA_DIR "/fixtures/expensedroid.app.json";

using oracle::EnumerateShortest;
using oracle::FloydWarshall;
using oracle::MakeRandomGraph;
using oracle::RandomGraph;
using oracle::SyntheticScreen;

TEST(SignatureTest, LabelsAndValuesAreExcluded) {
  AppModel m = AppModel::Load(kFixture);
  DeviceSession s(m);
  s.Execute({EventKind::kOpenApp, std::nullopt});
  ScreenInstance a = s.current();
  ScreenInstance b = a;
  EXPECT_EQ(Signature(a), Signature(b));
  b.root.children[0].label = "Something else";
  b.root.children[0].id = "renamed";
  EXPECT_EQ(Signature(a), Signature(b));
  // A list that gains a row is a different screen.
  ScreenInstance c = a;
  for (auto& child : c.root.children) {
    if (child.type == ComponentType::kList) child.children.push_back(child.children.back());
  }
  EXPECT_NE(Signature(a), Signature(c));
}

TEST(SignatureTest, FixtureScreensAreDistinct) {
  AppModel m = AppModel::Load(kFixture);
  std::set<std::string> sigs;
  for (const ScreenDef& def : m.screens()) sigs.insert(Signature({def.name, def.root, {}}));
  EXPECT_EQ(sigs.size(), m.screens().size());
}

TEST(ExploreTest, OneScreenThreeButtons) {
  AppModel m = AppModel::Parse(R"({"version": 1, "appName": "T", "initialScreen": "A",
    "screens": [{"name": "A", "components": [
      {"type": "Button", "id": "b1", "bounds": [0, 0, 10, 10]},
      {"type": "Button", "id": "b2", "bounds": [0, 20, 10, 10]},
      {"type": "Button", "id": "b3", "bounds": [0, 40, 10, 10]}]}]})");
  Trace trace = SystematicExplore(m, 100);
  ASSERT_EQ(trace.size(), 5u);
  EXPECT_EQ(trace[0].event.kind, EventKind::kOpenApp);
  EXPECT_EQ(trace[1].component_id, "b1");
  EXPECT_EQ(trace[2].component_id, "b2");
  EXPECT_EQ(trace[3].component_id, "b3");
  EXPECT_EQ(trace[4].event.kind, EventKind::kTapBack);
}

TEST(ExploreTest, BudgetOneIsLaunchOnly) {
  AppModel m = AppModel::Load(kFixture);
  Trace trace = SystematicExplore(m, 1);
  ASSERT_EQ(trace.size(), 1u);
  EXPECT_EQ(trace[0].event.kind, EventKind::kOpenApp);
  ExecutionGraph g;
  g.MergeTrace(trace);
  EXPECT_EQ(g.vertices().size(), 2u);
}

TEST(ExploreTest, FixtureCoverage) {
  AppModel m = AppModel::Load(kFixture);
  Trace trace = SystematicExplore(m, 200);
  std::set<std::string> screens;
  for (const TraceStep& step : trace) screens.insert(step.target.name);
  EXPECT_GE(screens.size(), 9u);
  ExecutionGraph g;
  g.MergeTrace(trace);
  EXPECT_EQ(g.vertices().size(), 11u);
  // Hand count of enabled actions per screen plus one back press each:
  // launch 1, Main 7, OptionsMenu 4, Settings 4, ColorPicker 5, Backup 3,
  // About 2, EntryDetail 3, CreateEntry 8, CategoryPicker 4, ConfirmDelete 3.
  EXPECT_EQ(g.edges().size(), 44u);
  EXPECT_EQ(g.OutEdges(ExecutionGraph::kStart).size(), 1u);
}

TEST(GraphTest, MergeIsIdempotent) {
  AppModel m = AppModel::Load(kFixture);
  Trace trace = SystematicExplore(m, 200);
  ExecutionGraph once;
  once.MergeTrace(trace);
  ExecutionGraph twice;
  twice.MergeTrace(trace);
  twice.MergeTrace(trace);
  EXPECT_EQ(once.Serialize(), twice.Serialize());

  ExecutionGraph loaded = ExecutionGraph::FromJson(nlohmann::json::parse(once.Serialize()));
  EXPECT_EQ(loaded.Serialize(), once.Serialize());
  loaded.MergeTrace(trace);
  EXPECT_EQ(loaded.Serialize(), once.Serialize());
}

TEST(GraphTest, SharedScreensMerge) {
  ExecutionGraph g;
  ScreenInstance a = SyntheticScreen(1);
  ScreenInstance b = SyntheticScreen(2);
  ScreenInstance a2 = a;
  a2.root.children[0].label = "different text";
  g.MergeTrace({{a, {EventKind::kTap, std::nullopt}, "x", b}});
  g.MergeTrace({{a2, {EventKind::kTap, std::nullopt}, "y", b}});
  EXPECT_EQ(g.vertices().size(), 3u);
  EXPECT_EQ(g.edges().size(), 2u);
}

TEST(GraphTest, TypedInputClassesAreDistinctEdges) {
  ExecutionGraph g;
  int a = g.AddScreen(SyntheticScreen(1));
  int b = g.AddScreen(SyntheticScreen(2));
  g.AddInteraction(a, b, {EventKind::kType, "10"}, "f");
  g.AddInteraction(a, a, {EventKind::kType, "abc"}, "f");
  g.AddInteraction(a, b, {EventKind::kType, "11"}, "f");
  EXPECT_EQ(g.edges().size(), 2u);
}

TEST(GraphTest, ShortestPathBasics) {
  ExecutionGraph g;
  int a = g.AddScreen(SyntheticScreen(1));
  int b = g.AddScreen(SyntheticScreen(2));
  int c = g.AddScreen(SyntheticScreen(3));
  g.AddInteraction(a, b, {EventKind::kTap, std::nullopt}, "ab");
  g.AddInteraction(b, c, {EventKind::kTap, std::nullopt}, "bc");
  EXPECT_TRUE(g.ShortestPath(a, a).empty());
  auto path = g.ShortestPath(a, c);
  ASSERT_EQ(path.size(), 2u);
  EXPECT_EQ(path[0].component_id, "ab");
  EXPECT_EQ(path[1].component_id, "bc");
  EXPECT_THROW(g.ShortestPath(c, a), NoPathError);
}

TEST(GraphTest, ShortestPathTieBreakByExecOrder) {
  ExecutionGraph g;
  int a = g.AddScreen(SyntheticScreen(1));
  int b = g.AddScreen(SyntheticScreen(2));
  int c = g.AddScreen(SyntheticScreen(3));
  int d = g.AddScreen(SyntheticScreen(4));
  g.AddInteraction(a, c, {EventKind::kTap, std::nullopt}, "ac");  // order 0
  g.AddInteraction(b, d, {EventKind::kTap, std::nullopt}, "bd");  // order 1
  g.AddInteraction(a, b, {EventKind::kTap, std::nullopt}, "ab");  // order 2
  g.AddInteraction(c, d, {EventKind::kTap, std::nullopt}, "cd");  // order 3
  auto path = g.ShortestPath(a, d);
  ASSERT_EQ(path.size(), 2u);
  EXPECT_EQ(path[0].component_id, "ac");
}

TEST(GraphTest, ShortestPathMatchesOracles) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 100; ++round) {
    int n = 2 + static_cast<int>(rng() % 49);
    double density = n <= 9 ? 0.3 : 2.5 / n;
    RandomGraph g = MakeRandomGraph(rng, n, density);
    auto dist = FloydWarshall(g.adjacency);
    for (int q = 0; q < 10; ++q) {
      int from = static_cast<int>(rng() % static_cast<unsigned>(n));
      int to = static_cast<int>(rng() % static_cast<unsigned>(n));
      int expected = dist[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
      bool reachable = expected < oracle::kUnreachable;
      if (n <= 9) {
        int enumerated = EnumerateShortest(g.adjacency, from, to);
        EXPECT_EQ(enumerated, reachable ? expected : -1);
      }
      if (!reachable) {
        EXPECT_THROW(g.graph.ShortestPath(g.ids[from], g.ids[to]), NoPathError);
        continue;
      }
      auto path = g.graph.ShortestPath(g.ids[from], g.ids[to]);
      ASSERT_EQ(static_cast<int>(path.size()), expected);
      int at = g.ids[from];
      for (const Edge& e : path) {
        EXPECT_EQ(e.source, at);
        // No earlier edge out of `at` also lies on a shortest path.
        for (const Edge* other : g.graph.OutEdges(at)) {
          if (other->exec_order >= e.exec_order) break;
          int t = other->target - 1;
          EXPECT_GT(dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(to)],
                    dist[static_cast<std::size_t>(e.target - 1)][static_cast<std::size_t>(to)]);
        }
        at = e.target;
      }
      EXPECT_EQ(at, g.ids[to]);
    }
  }
}

TEST(NeighborhoodTest, DepthZeroAndChain) {
  ExecutionGraph g;
  std::vector<int> ids;
  for (int i = 0; i < 10; ++i) ids.push_back(g.AddScreen(SyntheticScreen(i)));
  for (int i = 0; i + 1 < 10; ++i) {
    g.AddInteraction(ids[i], ids[i + 1], {EventKind::kTap, std::nullopt}, "next");
  }
  auto zero = g.Neighborhood(ids[0], 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], std::make_pair(ids[0], std::size_t{0}));
  auto six = g.Neighborhood(ids[0], 6);
  ASSERT_EQ(six.size(), 7u);
  for (std::size_t i = 0; i < six.size(); ++i) {
    EXPECT_EQ(six[i].first, ids[i]);
    EXPECT_EQ(six[i].second, i);
  }
}

TEST(NeighborhoodTest, FixtureMainDepthTwo) {
  AppModel m = AppModel::Load(kFixture);
  ExecutionGraph g;
  g.MergeTrace(SystematicExplore(m, 200));
  auto main = g.FindVertex({"Main", m.FindScreen("Main")->root, {}});
  ASSERT_TRUE(main.has_value());
  std::vector<std::pair<std::string, std::size_t>> got;
  for (auto [v, d] : g.Neighborhood(*main, 2)) got.emplace_back(g.vertex(v).screen.name, d);
  std::vector<std::pair<std::string, std::size_t>> expected = {
      {"Main", 0},        {"OptionsMenu", 1}, {"EntryDetail", 1}, {"ConfirmDelete", 1},
      {"CreateEntry", 1}, {"Settings", 2},    {"Backup", 2},      {"About", 2},
      {"CategoryPicker", 2}};
  EXPECT_EQ(got, expected);
}

TEST(NeighborhoodTest, DistancesAreBfsMinimal) {
  std::mt19937 rng(99);
  for (int round = 0; round < 50; ++round) {
    int n = 2 + static_cast<int>(rng() % 30);
    RandomGraph g = MakeRandomGraph(rng, n, 3.0 / n);
    auto dist = FloydWarshall(g.adjacency);
    int from = static_cast<int>(rng() % static_cast<unsigned>(n));
    std::size_t depth = rng() % 7;
    auto hood = g.graph.Neighborhood(g.ids[from], depth);
    std::size_t within = 0;
    for (int v = 0; v < n; ++v) {
      if (dist[static_cast<std::size_t>(from)][static_cast<std::size_t>(v)] <=
          static_cast<int>(depth)) {
        ++within;
      }
    }
    EXPECT_EQ(hood.size(), within);
    for (std::size_t i = 0; i < hood.size(); ++i) {
      int v = hood[i].first - 1;
      EXPECT_EQ(static_cast<int>(hood[i].second),
                dist[static_cast<std::size_t>(from)][static_cast<std::size_t>(v)]);
      if (i) EXPECT_LE(hood[i - 1].second, hood[i].second);
    }
  }
}

}  // namespace
}  // namespace reprolint
