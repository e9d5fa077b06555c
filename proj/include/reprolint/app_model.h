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

#ifndef REPROLINT_APP_MODEL_H_
#define REPROLINT_APP_MODEL_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace reprolint {

enum class ComponentType {
  kButton,
  kTextField,
  kTextView,
  kImageView,
  kLayout,
  kList,
  kCheckbox,
  kDropDown,
  kMenuItem,
};

std::string_view ComponentTypeName(ComponentType type);
std::optional<ComponentType> ParseComponentType(std::string_view name);

struct Bounds {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  bool Contains(const Bounds& other) const;
  bool operator==(const Bounds&) const = default;
};

struct ComponentFlags {
  bool tappable = false;
  bool long_tappable = false;
  bool typeable = false;
  bool checkable = false;
  bool pickable = false;
  bool focused = false;
  bool enabled = true;

  bool operator==(const ComponentFlags&) const = default;
};

// Flags a component of `type` has unless the model says otherwise.
ComponentFlags DefaultFlags(ComponentType type);

struct GuiComponent {
  ComponentType type = ComponentType::kLayout;
  std::string id;
  std::string label;
  std::string description;
  Bounds bounds;
  ComponentFlags flags;
  // Runtime value: typed text for fields, "checked" for checked boxes.
  std::string value;
  // Session tag that must be set for the component to be shown; empty means
  // always shown.
  std::string visible_when;
  std::vector<GuiComponent> children;

  bool operator==(const GuiComponent&) const = default;
};

// One rendered screen: a component hierarchy under a root Layout.
struct ScreenInstance {
  std::string name;
  GuiComponent root;
  std::set<std::string> state_tags;

  // Components in hierarchy pre-order (top-to-bottom), root first.
  std::vector<const GuiComponent*> Components() const;
  const GuiComponent* Find(std::string_view id) const;
  // Parent of the component with `id`; nullptr for the root or unknown ids.
  const GuiComponent* Parent(std::string_view id) const;

  bool operator==(const ScreenInstance&) const = default;
};

nlohmann::json ScreenToJson(const ScreenInstance& screen);
// Throws ModelError on malformed snapshots.
ScreenInstance ScreenFromJson(const nlohmann::json& doc);

enum class EventKind {
  kTap,
  kLongTap,
  kOpenApp,
  kTapBack,
  kTapMenu,
  kType,
  kSwipeUp,
  kSwipeDown,
  kSwipeLeft,
  kSwipeRight,
  kRotateLandscape,
  kRotatePortrait,
};

std::string_view EventKindName(EventKind kind);
std::optional<EventKind> ParseEventKind(std::string_view name);
bool RequiresComponent(EventKind kind);

struct Event {
  EventKind kind = EventKind::kTap;
  std::optional<std::string> input;  // present iff kind == kType

  bool operator==(const Event&) const = default;
};

// "empty", "numeric" or "text".
std::string InputClass(std::string_view input);

struct Transition {
  std::string screen;
  EventKind event = EventKind::kTap;
  std::string component_id;  // empty for component-less events
  std::string input_class;   // Type only; empty matches any input
  std::optional<std::string> input;  // Type only; exact literal
  std::string target;
  std::vector<std::string> add_tags;
  std::vector<std::string> remove_tags;
};

struct ScreenDef {
  std::string name;
  GuiComponent root;
};

// Declarative simulated application.
class AppModel {
 public:
  static constexpr int kVersion = 1;

  // Validates and builds a model; throws ModelError.
  static AppModel FromJson(const nlohmann::json& doc);
  static AppModel Parse(std::string_view text);
  static AppModel Load(const std::filesystem::path& path);

  // Canonical document (sorted keys, every field explicit).
  nlohmann::json ToJson() const;
  std::string CanonicalText() const { return ToJson().dump(); }

  const std::string& app_name() const { return app_name_; }
  const std::vector<std::string>& synonyms() const { return synonyms_; }
  const std::string& initial_screen() const { return initial_screen_; }
  const std::vector<ScreenDef>& screens() const { return screens_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  const ScreenDef* FindScreen(std::string_view name) const;

  // Most specific transition: exact input, then input class, then any input.
  // Tap and LongTap on a component without a transition are tried on its
  // ancestors; TapMenu falls back to Tap.
  const Transition* FindTransition(std::string_view screen, EventKind event,
                                   std::string_view component_id,
                                   const std::optional<std::string>& input) const;

 private:
  const Transition* FindExact(std::string_view screen, EventKind event,
                              std::string_view component_id,
                              const std::optional<std::string>& input) const;

  std::string app_name_;
  std::vector<std::string> synonyms_;
  std::string initial_screen_;
  std::vector<ScreenDef> screens_;
  std::vector<Transition> transitions_;
};

}  // namespace reprolint

#endif  // REPROLINT_APP_MODEL_H_
