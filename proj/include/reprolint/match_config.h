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

#ifndef REPROLINT_MATCH_CONFIG_H_
#define REPROLINT_MATCH_CONFIG_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "reprolint/app_model.h"

namespace reprolint {

enum class ActionGroup { kOpen, kLongClick, kClick, kSwipe, kType, kRotate };

std::string_view ActionGroupName(ActionGroup group);  // "OPEN", "LONG_CLICK", ...
std::optional<ActionGroup> ParseActionGroup(std::string_view name);

// Vocabulary driving step resolution. Defaults are built in; a config
// document replaces whole sections.
struct MatchConfig {
  static constexpr int kVersion = 1;

  double threshold = 0.5;
  std::vector<std::pair<ActionGroup, std::vector<std::string>>> action_groups;
  // Named keyword sets: app, back, menu, screen, selection, generic_input,
  // up, down, left, right, landscape, portrait. Entries may be phrases.
  std::map<std::string, std::vector<std::string>> keywords;
  std::vector<std::pair<ComponentType, std::vector<std::string>>> component_types;
  // Type events: "[enter] ['10'] [on] [price]" queries object2 for these.
  std::vector<std::string> object2_prepositions;
  // Type events: "[set] [price] [to] [10]" queries object for these.
  std::vector<std::string> object_prepositions;
  // Ordered term -> replacements table for query reformulation.
  std::vector<std::pair<std::string, std::vector<std::string>>> synonyms;

  // Names the app answers to; filled per assessment, not serialized.
  std::vector<std::string> app_names;

  static MatchConfig Defaults();
  // Throws ConfigError on unknown keys, bad values or illegal group overlaps.
  static MatchConfig FromJson(const nlohmann::json& doc);
  static MatchConfig Load(const std::filesystem::path& path);
  nlohmann::json ToJson() const;
  void Validate() const;

  void AddAppNames(const AppModel& model);

  std::vector<ActionGroup> GroupsOf(std::string_view verb) const;
  const std::vector<std::string>& Keywords(std::string_view set) const;
  // True when a keyword phrase of `set` occurs contiguously in `terms`.
  bool Mentions(const std::vector<std::string>& terms, std::string_view set) const;
  // First component type named in `terms`, if any.
  std::optional<ComponentType> NamedType(const std::vector<std::string>& terms) const;
  // `terms` with every component-type phrase removed.
  std::vector<std::string> WithoutTypeWords(const std::vector<std::string>& terms) const;
};

// True when `phrase` occurs contiguously in `terms`; sets `*at` to its start.
bool ContainsPhrase(const std::vector<std::string>& terms, const std::vector<std::string>& phrase,
                    std::size_t* at = nullptr);

}  // namespace reprolint

#endif  // REPROLINT_MATCH_CONFIG_H_
