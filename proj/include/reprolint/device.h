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

#ifndef REPROLINT_DEVICE_H_
#define REPROLINT_DEVICE_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "reprolint/app_model.h"

namespace reprolint {

// Name of the pseudo-screen shown before the app is launched.
inline constexpr std::string_view kLauncherScreen = "#launcher";

ScreenInstance LauncherScreen();

struct ExecutedInteraction {
  std::string source_screen;
  Event event;
  std::string component_id;
  std::string target_screen;

  bool operator==(const ExecutedInteraction&) const = default;
};

struct SessionState {
  bool launched = false;
  std::string screen;
  std::vector<std::string> back_stack;
  std::map<std::string, std::string> values;  // "screen/component" -> value
  std::map<std::string, std::string> focus;   // screen -> focused component
  std::set<std::string> tags;
  bool landscape = false;
  std::vector<ExecutedInteraction> history;

  bool operator==(const SessionState&) const = default;
};

class Checkpoint {
 public:
  const SessionState& state() const { return state_; }

 private:
  friend class DeviceSession;
  Checkpoint(std::uint64_t session_id, SessionState state)
      : session_id_(session_id), state_(std::move(state)) {}

  std::uint64_t session_id_;
  SessionState state_;
};

// A running instance of an AppModel. Single-owner; the model must outlive it.
class DeviceSession {
 public:
  explicit DeviceSession(const AppModel& model);

  const AppModel& model() const { return *model_; }
  const ScreenInstance& current() const { return current_; }
  const SessionState& state() const { return state_; }
  const std::vector<ExecutedInteraction>& history() const { return state_.history; }
  std::uint64_t id() const { return id_; }

  // Plays one event. Throws IllegalEventError when the component is absent,
  // disabled or incompatible with the event, or when the app is not running.
  const ScreenInstance& Execute(const Event& event, const std::string& component_id = "");

  Checkpoint Capture() const { return Checkpoint(id_, state_); }
  // Throws ForeignCheckpointError for checkpoints of other sessions.
  void Restore(const Checkpoint& checkpoint);

 private:
  void Render();

  const AppModel* model_;
  std::uint64_t id_;
  SessionState state_;
  ScreenInstance current_;
};

// Fresh session with `history` replayed from launch.
DeviceSession Replay(const AppModel& model, const std::vector<ExecutedInteraction>& history);

}  // namespace reprolint

#endif  // REPROLINT_DEVICE_H_
