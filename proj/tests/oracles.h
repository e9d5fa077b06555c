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

// Independent reference implementations shared by the unit and acceptance
// tests. They avoid the library's own algorithms on purpose.

#ifndef REPROLINT_TESTS_ORACLES_H_
#define REPROLINT_TESTS_ORACLES_H_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "reprolint/app_model.h"
#include "reprolint/graph.h"

namespace reprolint::oracle {

inline constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

// Term similarity with the longest common term substring found by trying every pair of
// start positions.
inline double Similarity(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0.0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = 0;
      while (i + k < a.size() && j + k < b.size() && a[i + k] == b[j + k]) ++k;
      best = std::max(best, k);
    }
  }
  return 2.0 * static_cast<double>(best) / static_cast<double>(a.size() + b.size());
}

// Random term sequence of length [0, max_len] over a small vocabulary, so
// that common substrings are frequent.
inline std::vector<std::string> RandomTerms(std::mt19937& rng, std::size_t max_len) {
  static const char* kVocab[] = {"tap", "save", "entry", "price", "back", "up", "menu", "new"};
  std::vector<std::string> out(rng() % (max_len + 1));
  for (auto& t : out) t = kVocab[rng() % 8];
  return out;
}

// A screen whose signature is unique to `i`. With `extra_label` it carries a
// second button with that label.
inline ScreenInstance SyntheticScreen(int i, const std::string& extra_label = "") {
  ScreenInstance s;
  s.name = "S" + std::to_string(i);
  s.root.type = ComponentType::kLayout;
  s.root.id = "root";
  s.root.bounds = {0, 0, 360, 640};
  GuiComponent b;
  b.type = ComponentType::kButton;
  b.id = "b";
  b.label = "Item";
  b.flags = DefaultFlags(ComponentType::kButton);
  b.bounds = {0, 0, i + 1, 10};
  s.root.children.push_back(b);
  if (!extra_label.empty()) {
    GuiComponent x = b;
    x.id = "x";
    x.label = extra_label;
    x.bounds = {0, 20, 50, 10};
    s.root.children.push_back(x);
  }
  return s;
}

struct RandomGraph {
  ExecutionGraph graph;
  std::vector<int> ids;  // synthetic index -> vertex id
  std::vector<std::vector<int>> adjacency;
};

// `labels[i]`, when non-empty, adds a labeled button to screen i.
inline RandomGraph MakeRandomGraph(std::mt19937& rng, int n, double density,
                                   const std::vector<std::string>& labels = {}) {
  RandomGraph g;
  g.adjacency.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    const std::string label =
        static_cast<std::size_t>(i) < labels.size() ? labels[static_cast<std::size_t>(i)] : "";
    g.ids.push_back(g.graph.AddScreen(SyntheticScreen(i, label)));
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && coin(rng) < density) pairs.emplace_back(a, b);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);  // exec order unrelated to ids
  for (auto [a, b] : pairs) {
    g.graph.AddInteraction(g.ids[a], g.ids[b], {EventKind::kTap, std::nullopt},
                           "to" + std::to_string(b));
    g.adjacency[static_cast<std::size_t>(a)].push_back(b);
  }
  return g;
}

// All-pairs distances by Floyd-Warshall; kUnreachable when there is no path.
inline std::vector<std::vector<int>> FloydWarshall(const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j : adj[i]) d[i][static_cast<std::size_t>(j)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

// Length of the shortest simple path by exhaustive enumeration, -1 if none.
inline int EnumerateShortest(const std::vector<std::vector<int>>& adj, int from, int to) {
  int best = -1;
  std::vector<bool> on_path(adj.size(), false);
  auto dfs = [&](auto& self, int at, int len) -> void {
    if (at == to) {
      if (best < 0 || len < best) best = len;
      return;
    }
    on_path[static_cast<std::size_t>(at)] = true;
    for (int next : adj[static_cast<std::size_t>(at)]) {
      if (!on_path[static_cast<std::size_t>(next)]) self(self, next, len + 1);
    }
    on_path[static_cast<std::size_t>(at)] = false;
  };
  dfs(dfs, from, 0);
  return best;
}

// A graph where some screens offer the same labeled button, so a step naming
// it resolves on several vertices at different distances.
struct ScoreCase {
  RandomGraph g;
  std::vector<bool> marked;
  int current = 0;  // synthetic index
  std::size_t depth = 0;
  // Minimal distance to a marked screen within depth, per Floyd-Warshall.
  std::optional<int> expected_distance;
};

inline constexpr const char* kScoreLabel = "Frobnicate";

inline ScoreCase MakeScoreCase(std::mt19937& rng) {
  ScoreCase c;
  const int n = 2 + static_cast<int>(rng() % 29);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  c.marked.assign(static_cast<std::size_t>(n), false);
  const int marks = 2 + static_cast<int>(rng() % 3);
  for (int m = 0; m < marks; ++m) {
    const std::size_t i = rng() % static_cast<unsigned>(n);
    c.marked[i] = true;
    labels[i] = kScoreLabel;
  }
  c.g = MakeRandomGraph(rng, n, 2.0 / n + 0.05, labels);
  c.current = static_cast<int>(rng() % static_cast<unsigned>(n));
  c.depth = rng() % 7;
  const auto dist = FloydWarshall(c.g.adjacency);
  for (int v = 0; v < n; ++v) {
    const int d = dist[static_cast<std::size_t>(c.current)][static_cast<std::size_t>(v)];
    if (c.marked[static_cast<std::size_t>(v)] && d <= static_cast<int>(c.depth) &&
        (!c.expected_distance || d < *c.expected_distance)) {
      c.expected_distance = d;
    }
  }
  return c;
}

}  // namespace reprolint::oracle

#endif  // REPROLINT_TESTS_ORACLES_H_
