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

#include "reprolint/device.h"

#include <atomic>

#include "reprolint/error.h"

namespace reprolint {
namespace {

std::atomic<std::uint64_t> next_session_id{1};

std::string Key(std::string_view screen, std::string_view component) {
  return std::string(screen) + "/" + std::string(component);
}

// Drops hidden subtrees and applies runtime values and focus.
void Materialize(GuiComponent& c, const std::string& screen, const SessionState& state,
                 const std::string* focused) {
  std::vector<GuiComponent> kept;
  for (auto& child : c.children) {
    if (!child.visible_when.empty() && !state.tags.contains(child.visible_when)) continue;
    Materialize(child, screen, state, focused);
    kept.push_back(std::move(child));
  }
  c.children = std::move(kept);
  if (auto it = state.values.find(Key(screen, c.id)); it != state.values.end()) {
    c.value = it->second;
  }
  if (focused) c.flags.focused = c.id == *focused;
}

}  // namespace

ScreenInstance LauncherScreen() {
  ScreenInstance s;
  s.name = std::string(kLauncherScreen);
  s.root.type = ComponentType::kLayout;
  s.root.id = "root";
  s.root.bounds = {0, 0, 360, 640};
  return s;
}

DeviceSession::DeviceSession(const AppModel& model)
    : model_(&model), id_(next_session_id++) {
  Render();
}

void DeviceSession::Render() {
  if (!state_.launched) {
    current_ = LauncherScreen();
    return;
  }
  const ScreenDef* def = model_->FindScreen(state_.screen);
  current_ = ScreenInstance{};
  current_.name = def->name;
  current_.root = def->root;
  auto focus = state_.focus.find(def->name);
  Materialize(current_.root, def->name, state_,
              focus == state_.focus.end() ? nullptr : &focus->second);
  current_.state_tags = state_.tags;
  if (state_.landscape) current_.state_tags.insert("orientation=landscape");
  for (const GuiComponent* c : current_.Components()) {
    if (c->flags.checkable && c->value == "checked") current_.state_tags.insert(c->id + "=checked");
  }
}

const ScreenInstance& DeviceSession::Execute(const Event& event,
                                             const std::string& component_id) {
  ExecutedInteraction record{current_.name, event, component_id, ""};
  if (event.kind != EventKind::kType && event.input) {
    throw IllegalEventError("only Type events carry input");
  }
  if (event.kind == EventKind::kOpenApp) {
    state_.launched = true;
    state_.screen = model_->initial_screen();
    state_.back_stack.clear();
    Render();
    record.target_screen = current_.name;
    state_.history.push_back(std::move(record));
    return current_;
  }
  if (!state_.launched) throw IllegalEventError("the app is not running");

  const std::string screen = state_.screen;
  if (RequiresComponent(event.kind)) {
    if (component_id.empty()) {
      throw IllegalEventError(std::string(EventKindName(event.kind)) + " needs a component");
    }
    const GuiComponent* c = current_.Find(component_id);
    if (!c) throw IllegalEventError("no component \"" + component_id + "\" on " + screen);
    if (!c->flags.enabled) throw IllegalEventError("component \"" + component_id + "\" is disabled");
    if (event.kind == EventKind::kType && !c->flags.typeable) {
      throw IllegalEventError("component \"" + component_id + "\" does not accept text");
    }
    const std::string key = Key(screen, component_id);
    if (event.kind == EventKind::kType) {
      state_.values[key] = event.input.value_or("");
      state_.focus[screen] = component_id;
    } else if (event.kind == EventKind::kTap) {
      if (c->flags.checkable) {
        if (state_.values[key] == "checked") {
          state_.values.erase(key);
        } else {
          state_.values[key] = "checked";
        }
      }
      if (c->flags.typeable) state_.focus[screen] = component_id;
    }
  } else if (!component_id.empty()) {
    throw IllegalEventError(std::string(EventKindName(event.kind)) + " takes no component");
  }
  if (event.kind == EventKind::kRotateLandscape) state_.landscape = true;
  if (event.kind == EventKind::kRotatePortrait) state_.landscape = false;

  const Transition* t = model_->FindTransition(screen, event.kind, component_id, event.input);
  if (t) {
    for (const auto& tag : t->remove_tags) state_.tags.erase(tag);
    for (const auto& tag : t->add_tags) state_.tags.insert(tag);
    if (t->target != screen) {
      if (!state_.back_stack.empty() && state_.back_stack.back() == t->target) {
        state_.back_stack.pop_back();
      } else {
        state_.back_stack.push_back(screen);
      }
      state_.screen = t->target;
    }
  } else if (event.kind == EventKind::kTapBack && !state_.back_stack.empty()) {
    state_.screen = state_.back_stack.back();
    state_.back_stack.pop_back();
  }
  Render();
  record.target_screen = current_.name;
  state_.history.push_back(std::move(record));
  return current_;
}

void DeviceSession::Restore(const Checkpoint& checkpoint) {
  if (checkpoint.session_id_ != id_) throw ForeignCheckpointError();
  state_ = checkpoint.state_;
  Render();
}

DeviceSession Replay(const AppModel& model, const std::vector<ExecutedInteraction>& history) {
  DeviceSession session(model);
  for (const ExecutedInteraction& step : history) session.Execute(step.event, step.component_id);
  return session;
}

}  // namespace reprolint
