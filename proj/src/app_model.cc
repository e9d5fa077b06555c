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

#include "reprolint/app_model.h"

#include <array>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <utility>

#include "reprolint/error.h"

namespace reprolint {
namespace {

using nlohmann::json;

constexpr int kDefaultWidth = 360;
constexpr int kDefaultHeight = 640;

constexpr std::array<std::pair<ComponentType, std::string_view>, 9> kTypeNames = {{
    {ComponentType::kButton, "Button"},
    {ComponentType::kTextField, "TextField"},
    {ComponentType::kTextView, "TextView"},
    {ComponentType::kImageView, "ImageView"},
    {ComponentType::kLayout, "Layout"},
    {ComponentType::kList, "List"},
    {ComponentType::kCheckbox, "Checkbox"},
    {ComponentType::kDropDown, "DropDown"},
    {ComponentType::kMenuItem, "MenuItem"},
}};

constexpr std::array<std::pair<EventKind, std::string_view>, 12> kEventNames = {{
    {EventKind::kTap, "Tap"},
    {EventKind::kLongTap, "LongTap"},
    {EventKind::kOpenApp, "OpenApp"},
    {EventKind::kTapBack, "TapBack"},
    {EventKind::kTapMenu, "TapMenu"},
    {EventKind::kType, "Type"},
    {EventKind::kSwipeUp, "SwipeUp"},
    {EventKind::kSwipeDown, "SwipeDown"},
    {EventKind::kSwipeLeft, "SwipeLeft"},
    {EventKind::kSwipeRight, "SwipeRight"},
    {EventKind::kRotateLandscape, "RotateLandscape"},
    {EventKind::kRotatePortrait, "RotatePortrait"},
}};

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw ModelError("app model: " + where + ": " + what);
}

void CheckKeys(const json& obj, const std::string& where,
               std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) Fail(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (std::string_view a : allowed) ok = ok || key == a;
    if (!ok) Fail(where, "unknown key \"" + key + "\"");
  }
}

std::string GetString(const json& obj, const char* key, const std::string& where,
                      bool required) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) Fail(where, std::string("missing \"") + key + "\"");
    return "";
  }
  if (!it->is_string()) Fail(where, std::string("\"") + key + "\" must be a string");
  return it->get<std::string>();
}

std::vector<std::string> GetStrings(const json& obj, const char* key,
                                    const std::string& where) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end()) return out;
  if (!it->is_array()) Fail(where, std::string("\"") + key + "\" must be an array");
  for (const auto& v : *it) {
    if (!v.is_string()) Fail(where, std::string("\"") + key + "\" must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

const json& GetArray(const json& obj, const char* key, const std::string& where) {
  static const json kEmpty = json::array();
  auto it = obj.find(key);
  if (it == obj.end()) return kEmpty;
  if (!it->is_array()) Fail(where, std::string("\"") + key + "\" must be an array");
  return *it;
}

int GetInt(const json& obj, const char* key, const std::string& where, int fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) Fail(where, std::string("\"") + key + "\" must be an integer");
  return it->get<int>();
}

GuiComponent ParseComponent(const json& doc, const std::string& where) {
  CheckKeys(doc, where,
            {"type", "id", "label", "description", "bounds", "flags", "visibleWhen", "value",
             "children"});
  GuiComponent c;
  std::string type = GetString(doc, "type", where, true);
  auto parsed = ParseComponentType(type);
  if (!parsed) Fail(where, "unknown component type \"" + type + "\"");
  c.type = *parsed;
  c.id = GetString(doc, "id", where, true);
  if (c.id.empty()) Fail(where, "empty component id");
  const std::string here = where + "/" + c.id;
  c.label = GetString(doc, "label", here, false);
  c.description = GetString(doc, "description", here, false);
  c.visible_when = GetString(doc, "visibleWhen", here, false);
  c.value = GetString(doc, "value", here, false);
  const json& b = GetArray(doc, "bounds", here);
  if (b.size() != 4) Fail(here, "\"bounds\" must be [x, y, width, height]");
  for (const auto& v : b) {
    if (!v.is_number_integer()) Fail(here, "bounds must be integers");
  }
  c.bounds = {b[0].get<int>(), b[1].get<int>(), b[2].get<int>(), b[3].get<int>()};
  if (c.bounds.width <= 0 || c.bounds.height <= 0) Fail(here, "bounds must have positive size");
  c.flags = DefaultFlags(c.type);
  if (auto it = doc.find("flags"); it != doc.end()) {
    CheckKeys(*it, here + "/flags",
              {"tappable", "longTappable", "typeable", "checkable", "pickable", "focused",
               "enabled"});
    auto flag = [&](const char* key, bool& out) {
      auto f = it->find(key);
      if (f == it->end()) return;
      if (!f->is_boolean()) Fail(here, std::string("flag \"") + key + "\" must be a boolean");
      out = f->get<bool>();
    };
    flag("tappable", c.flags.tappable);
    flag("longTappable", c.flags.long_tappable);
    flag("typeable", c.flags.typeable);
    flag("checkable", c.flags.checkable);
    flag("pickable", c.flags.pickable);
    flag("focused", c.flags.focused);
    flag("enabled", c.flags.enabled);
  }
  for (const auto& child : GetArray(doc, "children", here)) {
    c.children.push_back(ParseComponent(child, here));
  }
  return c;
}

json ComponentToJson(const GuiComponent& c) {
  json children = json::array();
  for (const auto& child : c.children) children.push_back(ComponentToJson(child));
  json doc = {
      {"type", ComponentTypeName(c.type)},
      {"id", c.id},
      {"label", c.label},
      {"description", c.description},
      {"bounds", {c.bounds.x, c.bounds.y, c.bounds.width, c.bounds.height}},
      {"flags",
       {{"tappable", c.flags.tappable},
        {"longTappable", c.flags.long_tappable},
        {"typeable", c.flags.typeable},
        {"checkable", c.flags.checkable},
        {"pickable", c.flags.pickable},
        {"focused", c.flags.focused},
        {"enabled", c.flags.enabled}}},
      {"children", std::move(children)},
  };
  if (!c.visible_when.empty()) doc["visibleWhen"] = c.visible_when;
  if (!c.value.empty()) doc["value"] = c.value;
  return doc;
}

void CollectPreorder(const GuiComponent& c, std::vector<const GuiComponent*>& out) {
  out.push_back(&c);
  for (const auto& child : c.children) CollectPreorder(child, out);
}

// Root-to-component chain, empty when `id` is absent.
bool PathTo(const GuiComponent& c, std::string_view id, std::vector<const GuiComponent*>& path) {
  path.push_back(&c);
  if (c.id == id) return true;
  for (const auto& child : c.children) {
    if (PathTo(child, id, path)) return true;
  }
  path.pop_back();
  return false;
}

void ValidateScreen(const ScreenDef& screen) {
  std::vector<const GuiComponent*> all;
  CollectPreorder(screen.root, all);
  std::set<std::string_view> ids;
  int focused = 0;
  for (const GuiComponent* c : all) {
    const std::string where = "screen " + screen.name;
    if (!ids.insert(c->id).second) Fail(where, "duplicate component id \"" + c->id + "\"");
    if (c != &screen.root && !screen.root.bounds.Contains(c->bounds)) {
      Fail(where, "component \"" + c->id + "\" lies outside the screen");
    }
    if (c->flags.focused) ++focused;
  }
  if (focused > 1) Fail("screen " + screen.name, "more than one focused component");
}

}  // namespace

json ScreenToJson(const ScreenInstance& screen) {
  return {{"name", screen.name},
          {"root", ComponentToJson(screen.root)},
          {"stateTags", screen.state_tags}};
}

ScreenInstance ScreenFromJson(const json& doc) {
  CheckKeys(doc, "screen snapshot", {"name", "root", "stateTags"});
  ScreenInstance s;
  s.name = GetString(doc, "name", "screen snapshot", true);
  auto root = doc.find("root");
  if (root == doc.end()) Fail("screen snapshot", "missing root");
  s.root = ParseComponent(*root, "screen snapshot " + s.name);
  for (const auto& tag : GetStrings(doc, "stateTags", "screen snapshot")) s.state_tags.insert(tag);
  return s;
}

bool Bounds::Contains(const Bounds& o) const {
  return o.x >= x && o.y >= y && o.x + o.width <= x + width && o.y + o.height <= y + height;
}

std::string_view ComponentTypeName(ComponentType type) {
  for (const auto& [t, name] : kTypeNames) {
    if (t == type) return name;
  }
  return "Layout";
}

std::optional<ComponentType> ParseComponentType(std::string_view name) {
  for (const auto& [t, n] : kTypeNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

ComponentFlags DefaultFlags(ComponentType type) {
  ComponentFlags f;
  switch (type) {
    case ComponentType::kButton:
    case ComponentType::kMenuItem:
      f.tappable = true;
      break;
    case ComponentType::kTextField:
      f.tappable = true;
      f.typeable = true;
      break;
    case ComponentType::kCheckbox:
      f.tappable = true;
      f.checkable = true;
      break;
    case ComponentType::kDropDown:
      f.tappable = true;
      f.pickable = true;
      break;
    default:
      break;
  }
  return f;
}

std::vector<const GuiComponent*> ScreenInstance::Components() const {
  std::vector<const GuiComponent*> out;
  CollectPreorder(root, out);
  return out;
}

const GuiComponent* ScreenInstance::Find(std::string_view id) const {
  for (const GuiComponent* c : Components()) {
    if (c->id == id) return c;
  }
  return nullptr;
}

const GuiComponent* ScreenInstance::Parent(std::string_view id) const {
  std::vector<const GuiComponent*> path;
  if (!PathTo(root, id, path) || path.size() < 2) return nullptr;
  return path[path.size() - 2];
}

std::string_view EventKindName(EventKind kind) {
  for (const auto& [k, name] : kEventNames) {
    if (k == kind) return name;
  }
  return "Tap";
}

std::optional<EventKind> ParseEventKind(std::string_view name) {
  for (const auto& [k, n] : kEventNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool RequiresComponent(EventKind kind) {
  return kind == EventKind::kTap || kind == EventKind::kLongTap ||
         kind == EventKind::kTapMenu || kind == EventKind::kType;
}

std::string InputClass(std::string_view input) {
  if (input.empty()) return "empty";
  std::size_t i = (input[0] == '-' || input[0] == '+') ? 1 : 0;
  bool digits = false;
  bool dot = false;
  for (; i < input.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(input[i]);
    if (std::isdigit(ch)) {
      digits = true;
    } else if ((ch == '.' || ch == ',') && !dot) {
      dot = true;
    } else {
      return "text";
    }
  }
  return digits ? "numeric" : "text";
}

AppModel AppModel::FromJson(const json& doc) {
  CheckKeys(doc, "document",
            {"version", "appName", "synonyms", "initialScreen", "screens", "transitions"});
  auto version = doc.find("version");
  if (version == doc.end() || !version->is_number_integer()) Fail("document", "missing version");
  if (version->get<int>() != kVersion) {
    Fail("document", "unsupported version " + version->dump());
  }
  AppModel m;
  m.app_name_ = GetString(doc, "appName", "document", true);
  if (m.app_name_.empty()) Fail("document", "empty appName");
  m.synonyms_ = GetStrings(doc, "synonyms", "document");
  m.initial_screen_ = GetString(doc, "initialScreen", "document", true);

  const json& screens = GetArray(doc, "screens", "document");
  if (screens.empty()) Fail("document", "no screens");
  for (const json& s : screens) {
    CheckKeys(s, "screen", {"name", "width", "height", "components"});
    ScreenDef def;
    def.name = GetString(s, "name", "screen", true);
    if (def.name.empty() || def.name[0] == '#') Fail("screen", "invalid name \"" + def.name + "\"");
    if (m.FindScreen(def.name)) Fail("screen " + def.name, "duplicate screen name");
    const std::string where = "screen " + def.name;
    def.root.type = ComponentType::kLayout;
    def.root.id = "root";
    def.root.bounds = {0, 0, GetInt(s, "width", where, kDefaultWidth),
                       GetInt(s, "height", where, kDefaultHeight)};
    if (def.root.bounds.width <= 0 || def.root.bounds.height <= 0) {
      Fail(where, "screen size must be positive");
    }
    for (const json& c : GetArray(s, "components", where)) {
      def.root.children.push_back(ParseComponent(c, where));
    }
    ValidateScreen(def);
    m.screens_.push_back(std::move(def));
  }
  if (!m.FindScreen(m.initial_screen_)) {
    Fail("document", "initial screen \"" + m.initial_screen_ + "\" does not exist");
  }

  for (const json& t : GetArray(doc, "transitions", "document")) {
    CheckKeys(t, "transition", {"screen", "event", "componentId", "inputClass", "input",
                                "target", "addTags", "removeTags"});
    Transition tr;
    tr.screen = GetString(t, "screen", "transition", true);
    const std::string where = "transition from " + tr.screen;
    std::string event = GetString(t, "event", where, true);
    auto kind = ParseEventKind(event);
    if (!kind) Fail(where, "unknown event \"" + event + "\"");
    if (*kind == EventKind::kOpenApp) Fail(where, "OpenApp transitions are implicit");
    tr.event = *kind;
    tr.component_id = GetString(t, "componentId", where, false);
    tr.input_class = GetString(t, "inputClass", where, false);
    if (t.contains("input")) tr.input = GetString(t, "input", where, true);
    tr.target = GetString(t, "target", where, true);
    tr.add_tags = GetStrings(t, "addTags", where);
    tr.remove_tags = GetStrings(t, "removeTags", where);

    const ScreenDef* source = m.FindScreen(tr.screen);
    if (!source) Fail(where, "unknown screen");
    if (!m.FindScreen(tr.target)) Fail(where, "dangling target \"" + tr.target + "\"");
    if (RequiresComponent(tr.event)) {
      if (tr.component_id.empty()) Fail(where, event + " needs a componentId");
      std::vector<const GuiComponent*> path;
      if (!PathTo(source->root, tr.component_id, path)) {
        Fail(where, "unknown component \"" + tr.component_id + "\"");
      }
    } else if (!tr.component_id.empty()) {
      Fail(where, event + " takes no componentId");
    }
    if (tr.event != EventKind::kType && (!tr.input_class.empty() || tr.input)) {
      Fail(where, "input constraints apply to Type only");
    }
    if (!tr.input_class.empty() && tr.input_class != "empty" && tr.input_class != "numeric" &&
        tr.input_class != "text") {
      Fail(where, "unknown inputClass \"" + tr.input_class + "\"");
    }
    for (const Transition& other : m.transitions_) {
      if (other.screen == tr.screen && other.event == tr.event &&
          other.component_id == tr.component_id && other.input_class == tr.input_class &&
          other.input == tr.input) {
        Fail(where, "duplicate transition");
      }
    }
    m.transitions_.push_back(std::move(tr));
  }
  return m;
}

AppModel AppModel::Parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("app model: malformed JSON: ") + e.what());
  }
  return FromJson(doc);
}

AppModel AppModel::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("app model: cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

json AppModel::ToJson() const {
  json screens = json::array();
  for (const ScreenDef& s : screens_) {
    json components = json::array();
    for (const auto& c : s.root.children) components.push_back(ComponentToJson(c));
    screens.push_back({{"name", s.name},
                       {"width", s.root.bounds.width},
                       {"height", s.root.bounds.height},
                       {"components", std::move(components)}});
  }
  json transitions = json::array();
  for (const Transition& t : transitions_) {
    json doc = {{"screen", t.screen}, {"event", EventKindName(t.event)}, {"target", t.target}};
    if (!t.component_id.empty()) doc["componentId"] = t.component_id;
    if (!t.input_class.empty()) doc["inputClass"] = t.input_class;
    if (t.input) doc["input"] = *t.input;
    if (!t.add_tags.empty()) doc["addTags"] = t.add_tags;
    if (!t.remove_tags.empty()) doc["removeTags"] = t.remove_tags;
    transitions.push_back(std::move(doc));
  }
  return {{"version", kVersion},
          {"appName", app_name_},
          {"synonyms", synonyms_},
          {"initialScreen", initial_screen_},
          {"screens", std::move(screens)},
          {"transitions", std::move(transitions)}};
}

const ScreenDef* AppModel::FindScreen(std::string_view name) const {
  for (const ScreenDef& s : screens_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const Transition* AppModel::FindExact(std::string_view screen, EventKind event,
                                      std::string_view component_id,
                                      const std::optional<std::string>& input) const {
  const Transition* by_class = nullptr;
  const Transition* any = nullptr;
  for (const Transition& t : transitions_) {
    if (t.screen != screen || t.event != event || t.component_id != component_id) continue;
    if (event != EventKind::kType) return &t;
    if (t.input) {
      if (input && *t.input == *input) return &t;
    } else if (!t.input_class.empty()) {
      if (!by_class && t.input_class == InputClass(input.value_or(""))) by_class = &t;
    } else if (!any) {
      any = &t;
    }
  }
  return by_class ? by_class : any;
}

const Transition* AppModel::FindTransition(std::string_view screen, EventKind event,
                                           std::string_view component_id,
                                           const std::optional<std::string>& input) const {
  if (const Transition* t = FindExact(screen, event, component_id, input)) return t;
  if (event == EventKind::kTapMenu) event = EventKind::kTap;
  if (event != EventKind::kTap && event != EventKind::kLongTap) return nullptr;
  const ScreenDef* def = FindScreen(screen);
  if (!def) return nullptr;
  std::vector<const GuiComponent*> path;
  if (!PathTo(def->root, component_id, path)) return nullptr;
  // A click on a non-clickable view is handled by its nearest clickable
  // ancestor.
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const GuiComponent* c = *it;
    if (const Transition* t = FindExact(screen, event, c->id, input)) return t;
    bool consumes = event == EventKind::kTap ? c->flags.tappable : c->flags.long_tappable;
    if (consumes) break;
  }
  return nullptr;
}

}  // namespace reprolint
