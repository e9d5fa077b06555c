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

#ifndef REPROLINT_RESOLVE_H_
#define REPROLINT_RESOLVE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "reprolint/app_model.h"
#include "reprolint/match_config.h"
#include "reprolint/s2r.h"

namespace reprolint {

// |longest common term substring| / average length; 0 if either is empty.
double Similarity(const std::vector<std::string>& a, const std::vector<std::string>& b);

struct ScoredComponent {
  const GuiComponent* component = nullptr;
  double score = 0.0;
};

struct ComponentMatch {
  enum class Kind { kMatch, kMultiple, kMismatch };
  Kind kind = Kind::kMismatch;
  const GuiComponent* component = nullptr;  // kMatch only
  std::vector<ScoredComponent> candidates;  // by score, then screen order
  std::string rule;                         // which step decided
};

// Matching algorithm over `components` (screen order) for one query.
// Synonym reformulation is applied when no component reaches the threshold.
ComponentMatch MatchComponent(const std::vector<std::string>& query,
                              const std::vector<const GuiComponent*>& components,
                              EventKind event, const MatchConfig& cfg);

// Generated inputs for Type events without a literal; starts at 1.
class InputCounter {
 public:
  std::string Next() { return std::to_string(next_++); }
  std::uint64_t peek() const { return next_; }

 private:
  std::uint64_t next_ = 1;
};

struct Candidate {
  EventKind event = EventKind::kTap;
  std::string component_id;  // empty for event-only candidates
  std::string label;
  double score = 0.0;
};

// An interaction resolved on one screen; its target is not yet known.
struct ResolvedInteraction {
  Event event;
  std::string component_id;
};

struct ResolutionResult {
  enum class Outcome { kResolved, kMismatch, kMultipleMatch };
  Outcome outcome = Outcome::kMismatch;
  ResolvedInteraction interaction;  // kResolved only
  // S2R constituents that could not be matched: "action", "object", "object2".
  std::vector<std::string> failed;
  std::vector<Candidate> candidates;  // kMultipleMatch only, best first
  std::string detail;
};

std::string_view OutcomeName(ResolutionResult::Outcome outcome);

// Event, component and input resolution of one step on one screen.
ResolutionResult ResolveStep(const S2R& step, const ScreenInstance& screen,
                             const MatchConfig& cfg, InputCounter& counter);

}  // namespace reprolint

#endif  // REPROLINT_RESOLVE_H_
