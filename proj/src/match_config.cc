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

#include "reprolint/match_config.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "reprolint/error.h"
#include "reprolint/text.h"

namespace reprolint {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<ActionGroup, std::string_view>, 6> kGroupNames = {{
    {ActionGroup::kOpen, "OPEN"},
    {ActionGroup::kLongClick, "LONG_CLICK"},
    {ActionGroup::kClick, "CLICK"},
    {ActionGroup::kSwipe, "SWIPE"},
    {ActionGroup::kType, "TYPE"},
    {ActionGroup::kRotate, "ROTATE"},
}};

bool MayOverlap(ActionGroup g) {
  return g == ActionGroup::kType || g == ActionGroup::kClick || g == ActionGroup::kRotate;
}

std::vector<std::string> Strings(const json& value, const std::string& where) {
  if (!value.is_array()) throw ConfigError("match config: " + where + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) throw ConfigError("match config: " + where + " must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

std::string_view ActionGroupName(ActionGroup group) {
  for (const auto& [g, name] : kGroupNames) {
    if (g == group) return name;
  }
  return "CLICK";
}

std::optional<ActionGroup> ParseActionGroup(std::string_view name) {
  for (const auto& [g, n] : kGroupNames) {
    if (n == name) return g;
  }
  return std::nullopt;
}

bool ContainsPhrase(const std::vector<std::string>& terms, const std::vector<std::string>& phrase,
                    std::size_t* at) {
  if (phrase.empty() || phrase.size() > terms.size()) return false;
  for (std::size_t i = 0; i + phrase.size() <= terms.size(); ++i) {
    if (std::equal(phrase.begin(), phrase.end(), terms.begin() + static_cast<long>(i))) {
      if (at) *at = i;
      return true;
    }
  }
  return false;
}

MatchConfig MatchConfig::Defaults() {
  MatchConfig c;
  c.action_groups = {
      {ActionGroup::kOpen,
       {"open", "launch", "start", "run", "restart", "reopen", "access", "visit", "load"}},
      {ActionGroup::kLongClick, {"long-tap", "long-press", "long-click", "hold"}},
      {ActionGroup::kClick,
       {"tap", "click", "press", "hit", "push", "touch", "select", "choose", "pick", "mark",
        "check", "uncheck", "tick", "toggle", "go", "navigate", "return", "leave", "enter",
        "turn", "switch", "enable", "disable", "activate"}},
      {ActionGroup::kSwipe, {"swipe", "scroll", "slide", "fling", "drag"}},
      {ActionGroup::kType,
       {"type", "enter", "input", "insert", "edit", "set", "write", "fill", "put", "change",
        "specify", "provide"}},
      {ActionGroup::kRotate, {"rotate", "turn", "change", "switch", "flip", "tilt"}},
  };
  c.keywords = {
      {"app", {"app", "application"}},
      {"back", {"back", "leave", "return", "previous screen"}},
      {"menu", {"menu", "more options", "three dots", "overflow", "options menu"}},
      {"screen", {"screen", "phone", "device"}},
      {"selection", {"select", "choose", "pick", "mark", "check", "uncheck", "tick"}},
      {"generic_input", {"text", "something", "value", "input", "data", "anything"}},
      {"up", {"up", "upward", "top"}},
      {"down", {"down", "downward", "bottom"}},
      {"left", {"left"}},
      {"right", {"right"}},
      {"landscape", {"landscape", "horizontal", "sideways"}},
      {"portrait", {"portrait", "vertical", "upright"}},
  };
  c.component_types = {
      {ComponentType::kButton, {"button"}},
      {ComponentType::kTextField,
       {"text field", "field", "textbox", "text box", "input field", "edit text"}},
      {ComponentType::kTextView, {"text view", "label"}},
      {ComponentType::kImageView, {"image", "icon", "picture"}},
      {ComponentType::kList, {"list"}},
      {ComponentType::kCheckbox, {"checkbox", "check box"}},
      {ComponentType::kDropDown, {"dropdown", "drop down", "spinner"}},
      {ComponentType::kMenuItem, {"menu item", "menu entry"}},
  };
  c.object2_prepositions = {"on", "in", "into", "for", "of", "as"};
  c.object_prepositions = {"to", "with"};
  c.synonyms = {
      {"backup", {"back up"}},
      {"back up", {"backup"}},
      {"setting", {"preference", "option"}},
      {"preference", {"setting"}},
      {"delete", {"remove", "erase"}},
      {"remove", {"delete"}},
      {"erase", {"delete"}},
      {"new", {"add", "create"}},
      {"add", {"new", "create"}},
      {"create", {"new", "add"}},
      {"colour", {"color"}},
      {"color", {"colour", "theme"}},
      {"ok", {"confirm", "yes"}},
      {"confirm", {"ok", "yes"}},
      {"close", {"dismiss", "done"}},
  };
  return c;
}

MatchConfig MatchConfig::FromJson(const json& doc) {
  if (!doc.is_object()) throw ConfigError("match config: expected an object");
  MatchConfig c = Defaults();
  for (const auto& [key, value] : doc.items()) {
    if (key == "version") {
      if (!value.is_number_integer() || value.get<int>() != kVersion) {
        throw ConfigError("match config: unsupported version " + value.dump());
      }
    } else if (key == "threshold") {
      if (!value.is_number()) throw ConfigError("match config: threshold must be a number");
      c.threshold = value.get<double>();
    } else if (key == "actionGroups") {
      if (!value.is_object()) throw ConfigError("match config: actionGroups must be an object");
      c.action_groups.clear();
      for (const auto& [name, verbs] : value.items()) {
        auto g = ParseActionGroup(name);
        if (!g) throw ConfigError("match config: unknown action group \"" + name + "\"");
        c.action_groups.emplace_back(*g, Strings(verbs, "actionGroups." + name));
      }
      std::sort(c.action_groups.begin(), c.action_groups.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    } else if (key == "keywords") {
      if (!value.is_object()) throw ConfigError("match config: keywords must be an object");
      for (const auto& [name, words] : value.items()) {
        c.keywords[name] = Strings(words, "keywords." + name);
      }
    } else if (key == "componentTypes") {
      if (!value.is_object()) throw ConfigError("match config: componentTypes must be an object");
      c.component_types.clear();
      for (const auto& [name, words] : value.items()) {
        auto t = ParseComponentType(name);
        if (!t) throw ConfigError("match config: unknown component type \"" + name + "\"");
        c.component_types.emplace_back(*t, Strings(words, "componentTypes." + name));
      }
      std::sort(c.component_types.begin(), c.component_types.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    } else if (key == "typePrepositions") {
      if (!value.is_object()) throw ConfigError("match config: typePrepositions must be an object");
      for (const auto& [name, words] : value.items()) {
        if (name == "object2") {
          c.object2_prepositions = Strings(words, "typePrepositions.object2");
        } else if (name == "object") {
          c.object_prepositions = Strings(words, "typePrepositions.object");
        } else {
          throw ConfigError("match config: unknown typePrepositions key \"" + name + "\"");
        }
      }
    } else if (key == "synonyms") {
      if (!value.is_array()) throw ConfigError("match config: synonyms must be an array");
      c.synonyms.clear();
      for (const auto& entry : value) {
        if (!entry.is_object() || !entry.contains("term") || !entry.contains("replacements") ||
            !entry["term"].is_string() || entry.size() != 2) {
          throw ConfigError("match config: synonyms entries are {term, replacements}");
        }
        c.synonyms.emplace_back(entry["term"].get<std::string>(),
                                Strings(entry["replacements"], "synonyms.replacements"));
      }
    } else {
      throw ConfigError("match config: unknown key \"" + key + "\"");
    }
  }
  c.Validate();
  return c;
}

MatchConfig MatchConfig::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("match config: cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return FromJson(json::parse(buf.str()));
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("match config: malformed JSON: ") + e.what());
  }
}

void MatchConfig::Validate() const {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ConfigError("match config: threshold must lie in (0, 1]");
  }
  std::map<std::string, ActionGroup> owner;
  for (const auto& [group, verbs] : action_groups) {
    for (const auto& verb : verbs) {
      auto [it, inserted] = owner.emplace(verb, group);
      if (!inserted && it->second != group && !(MayOverlap(group) && MayOverlap(it->second))) {
        throw ConfigError("match config: verb \"" + verb + "\" is shared by " +
                          std::string(ActionGroupName(it->second)) + " and " +
                          std::string(ActionGroupName(group)) +
                          "; only TYPE, CLICK and ROTATE may overlap");
      }
    }
  }
}

json MatchConfig::ToJson() const {
  json groups = json::object();
  for (const auto& [g, verbs] : action_groups) groups[std::string(ActionGroupName(g))] = verbs;
  json types = json::object();
  for (const auto& [t, words] : component_types) types[std::string(ComponentTypeName(t))] = words;
  json syn = json::array();
  for (const auto& [term, repl] : synonyms) syn.push_back({{"term", term}, {"replacements", repl}});
  return {{"version", kVersion},
          {"threshold", threshold},
          {"actionGroups", std::move(groups)},
          {"keywords", keywords},
          {"componentTypes", std::move(types)},
          {"typePrepositions",
           {{"object2", object2_prepositions}, {"object", object_prepositions}}},
          {"synonyms", std::move(syn)}};
}

void MatchConfig::AddAppNames(const AppModel& model) {
  app_names.push_back(model.app_name());
  for (const auto& s : model.synonyms()) app_names.push_back(s);
}

std::vector<ActionGroup> MatchConfig::GroupsOf(std::string_view verb) const {
  std::vector<ActionGroup> out;
  for (const auto& [g, verbs] : action_groups) {
    if (std::find(verbs.begin(), verbs.end(), verb) != verbs.end()) out.push_back(g);
  }
  return out;
}

const std::vector<std::string>& MatchConfig::Keywords(std::string_view set) const {
  static const std::vector<std::string> kNone;
  auto it = keywords.find(std::string(set));
  return it == keywords.end() ? kNone : it->second;
}

bool MatchConfig::Mentions(const std::vector<std::string>& terms, std::string_view set) const {
  for (const auto& phrase : Keywords(set)) {
    if (ContainsPhrase(terms, Terms(phrase))) return true;
  }
  if (set == "app") {
    for (const auto& name : app_names) {
      if (ContainsPhrase(terms, Terms(name))) return true;
    }
  }
  return false;
}

std::optional<ComponentType> MatchConfig::NamedType(const std::vector<std::string>& terms) const {
  std::size_t best_at = terms.size();
  std::optional<ComponentType> best;
  for (const auto& [type, words] : component_types) {
    for (const auto& w : words) {
      std::size_t at = 0;
      if (ContainsPhrase(terms, Terms(w), &at) && at < best_at) {
        best_at = at;
        best = type;
      }
    }
  }
  return best;
}

std::vector<std::string> MatchConfig::WithoutTypeWords(const std::vector<std::string>& terms) const {
  std::vector<bool> drop(terms.size(), false);
  for (const auto& [type, words] : component_types) {
    for (const auto& w : words) {
      std::vector<std::string> phrase = Terms(w);
      for (std::size_t i = 0; i + phrase.size() <= terms.size() && !phrase.empty(); ++i) {
        if (std::equal(phrase.begin(), phrase.end(), terms.begin() + static_cast<long>(i))) {
          for (std::size_t k = 0; k < phrase.size(); ++k) drop[i + k] = true;
        }
      }
    }
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!drop[i]) out.push_back(terms[i]);
  }
  return out;
}

}  // namespace reprolint
