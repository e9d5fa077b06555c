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

#include "reprolint/resolve.h"

#include <algorithm>
#include <optional>

namespace reprolint {
namespace {

using Outcome = ResolutionResult::Outcome;

std::vector<std::string> Concat(std::initializer_list<const std::vector<std::string>*> parts) {
  std::vector<std::string> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

std::string LabelOf(const GuiComponent& c) {
  if (!c.label.empty()) return c.label;
  if (!c.description.empty()) return c.description;
  return c.id;
}

double ComponentScore(const std::vector<std::string>& query, const GuiComponent& c) {
  for (const std::string* field : {&c.label, &c.description, &c.id}) {
    double s = Similarity(query, Terms(*field));
    if (s > 0.0) return s;
  }
  return 0.0;
}

// Steps 1-3 of the matching algorithm and the multi-candidate heuristics,
// without query reformulation.
ComponentMatch MatchOnce(const std::vector<std::string>& query,
                         const std::vector<const GuiComponent*>& components, EventKind event,
                         const MatchConfig& cfg) {
  ComponentMatch out;
  if (query.empty() || components.empty()) return out;
  if (cfg.Mentions(query, "screen")) {
    for (const GuiComponent* c : components) {
      if (!c->flags.tappable) {
        out.kind = ComponentMatch::Kind::kMatch;
        out.component = c;
        out.rule = "screen-keyword";
        return out;
      }
    }
  }
  if (auto type = cfg.NamedType(query)) {
    const GuiComponent* only = nullptr;
    int count = 0;
    for (const GuiComponent* c : components) {
      if (c->type == *type) {
        only = c;
        ++count;
      }
    }
    if (count == 1) {
      out.kind = ComponentMatch::Kind::kMatch;
      out.component = only;
      out.rule = "unique-type";
      return out;
    }
  }
  for (const GuiComponent* c : components) {
    double s = ComponentScore(query, *c);
    if (s >= cfg.threshold) out.candidates.push_back({c, s});
  }
  std::stable_sort(out.candidates.begin(), out.candidates.end(),
                   [](const auto& a, const auto& b) { return a.score > b.score; });
  if (out.candidates.empty()) return out;
  auto pick = [&](const GuiComponent* c, const char* rule) {
    out.kind = ComponentMatch::Kind::kMatch;
    out.component = c;
    out.rule = rule;
    return out;
  };
  if (out.candidates.size() == 1) return pick(out.candidates[0].component, "single-candidate");
  for (const auto& cand : out.candidates) {
    if (cand.component->type == ComponentType::kLayout && cand.component->children.size() == 1) {
      return pick(&cand.component->children[0], "layout-child");
    }
  }
  bool same_type = std::all_of(out.candidates.begin(), out.candidates.end(), [&](const auto& c) {
    return c.component->type == out.candidates[0].component->type;
  });
  // A tie at the top leaves the highest-scoring component undetermined.
  if (same_type && out.candidates[0].score > out.candidates[1].score) {
    return pick(out.candidates[0].component, "same-type");
  }
  auto only_of = [&](ComponentType type) -> const GuiComponent* {
    const GuiComponent* found = nullptr;
    for (const auto& cand : out.candidates) {
      if (cand.component->type != type) continue;
      if (found) return nullptr;
      found = cand.component;
    }
    return found;
  };
  if (event == EventKind::kType) {
    if (const GuiComponent* f = only_of(ComponentType::kTextField)) return pick(f, "type-field");
  } else if (event == EventKind::kTap || event == EventKind::kLongTap ||
             event == EventKind::kTapMenu) {
    if (const GuiComponent* b = only_of(ComponentType::kButton)) return pick(b, "tap-button");
  }
  out.kind = ComponentMatch::Kind::kMultiple;
  return out;
}

bool AllLiteral(const std::vector<Token>& tokens) {
  return !tokens.empty() &&
         std::all_of(tokens.begin(), tokens.end(), [](const Token& t) { return t.is_literal(); });
}

std::optional<std::string> LiteralOf(const std::vector<Token>& tokens) {
  for (const Token& t : tokens) {
    if (t.is_literal()) return t.literal_value();
  }
  return std::nullopt;
}

bool Contains(const std::vector<std::string>& list, const std::string& word) {
  return std::find(list.begin(), list.end(), word) != list.end();
}

std::vector<Candidate> ToCandidates(const ComponentMatch& m, EventKind event) {
  std::vector<Candidate> out;
  for (const auto& c : m.candidates) {
    out.push_back({event, c.component->id, LabelOf(*c.component), c.score});
  }
  return out;
}

ResolutionResult FromMatch(const ComponentMatch& m, EventKind event,
                           std::vector<std::string> failed) {
  ResolutionResult r;
  if (m.kind == ComponentMatch::Kind::kMatch) {
    r.outcome = Outcome::kResolved;
    r.interaction = {{event, std::nullopt}, m.component->id};
    r.detail = m.rule;
  } else if (m.kind == ComponentMatch::Kind::kMultiple) {
    r.outcome = Outcome::kMultipleMatch;
    r.candidates = ToCandidates(m, event);
    r.failed = std::move(failed);
    r.detail = "several components match";
  } else {
    r.outcome = Outcome::kMismatch;
    r.failed = std::move(failed);
    r.detail = "no component matches";
  }
  return r;
}

class StepResolver {
 public:
  StepResolver(const S2R& step, const ScreenInstance& screen, const MatchConfig& cfg)
      : step_(step),
        screen_(screen),
        cfg_(cfg),
        action_{step.action},
        object_(step.object_terms()),
        object2_(step.object2_terms()) {
    for (const GuiComponent* c : screen.Components()) {
      if (c->flags.enabled) enabled_.push_back(c);
    }
  }

  ResolutionResult Resolve(InputCounter& counter) {
    std::vector<ActionGroup> groups = cfg_.GroupsOf(step_.action);
    if (groups.empty()) return ResolveFeature(counter);
    if (groups.size() > 1) return ResolveAmbiguousGroups(groups, counter);
    return ResolveGroup(groups[0], counter);
  }

 private:
  std::vector<std::string> Failed() const {
    std::vector<std::string> out;
    if (!object_.empty()) out.push_back("object");
    if (!object2_.empty()) out.push_back("object2");
    if (out.empty()) out.push_back("action");
    return out;
  }

  // Tap, long tap and menu queries: full step, object, object2, action+object.
  ResolutionResult ResolveClickComponent(EventKind event) {
    std::vector<const GuiComponent*> space = enabled_;
    if (cfg_.Mentions(action_, "selection")) {
      std::erase_if(space, [](const GuiComponent* c) {
        return !c->flags.checkable && !c->flags.pickable;
      });
    }
    ComponentMatch last;
    auto run = [&](const std::vector<std::string>& q) {
      if (q.empty()) return false;
      last = MatchComponent(q, space, event, cfg_);
      return last.kind == ComponentMatch::Kind::kMatch;
    };
    if (!run(Concat({&action_, &object_, &object2_})) && !run(object_) && !run(object2_)) {
      run(Concat({&action_, &object_}));
    }
    if (event == EventKind::kTapMenu && last.kind != ComponentMatch::Kind::kMatch) {
      for (const GuiComponent* c : space) {
        if (cfg_.Mentions(Terms(c->label), "menu") ||
            cfg_.Mentions(Terms(c->description), "menu") || cfg_.Mentions(Terms(c->id), "menu")) {
          last = ComponentMatch{ComponentMatch::Kind::kMatch, c, {}, "menu-keyword"};
          break;
        }
      }
    }
    return FromMatch(last, event, Failed());
  }

  ResolutionResult ResolveTypeComponent(InputCounter& counter) {
    std::vector<const GuiComponent*> space;
    for (const GuiComponent* c : enabled_) {
      if (c->flags.typeable) space.push_back(c);
    }
    const std::string prep = step_.preposition_lemma();
    const bool obj_literal = AllLiteral(step_.object);
    const bool obj2_literal = AllLiteral(step_.object2);
    ComponentMatch m;
    std::vector<std::string> failed;
    if (obj_literal && !step_.object2.empty() && !obj2_literal &&
        Contains(cfg_.object2_prepositions, prep)) {
      m = MatchComponent(object2_, space, EventKind::kType, cfg_);
      failed = {"object2"};
    } else if (!step_.object.empty() && !obj_literal && obj2_literal &&
               Contains(cfg_.object_prepositions, prep)) {
      m = MatchComponent(object_, space, EventKind::kType, cfg_);
      failed = {"object"};
    } else if (obj_literal && !step_.preposition && step_.object2.empty()) {
      for (const GuiComponent* c : space) {
        if (c->flags.focused) m = ComponentMatch{ComponentMatch::Kind::kMatch, c, {}, "focused"};
      }
      failed = {"object"};
      if (m.kind != ComponentMatch::Kind::kMatch) {
        ResolutionResult r = FromMatch(m, EventKind::kType, failed);
        r.detail = "no focused field on this screen";
        return r;
      }
    } else {
      auto run = [&](const std::vector<std::string>& q) {
        if (q.empty()) return false;
        m = MatchComponent(q, space, EventKind::kType, cfg_);
        return m.kind == ComponentMatch::Kind::kMatch;
      };
      if (!run(Concat({&action_, &object_, &object2_})) && !run(object_) && !run(object2_)) {
        run(Concat({&action_, &object_}));
      }
      failed = Failed();
    }
    ResolutionResult r = FromMatch(m, EventKind::kType, failed);
    if (r.outcome == Outcome::kResolved) r.interaction.event.input = ResolveInput(counter);
    return r;
  }

  std::string ResolveInput(InputCounter& counter) const {
    if (auto lit = LiteralOf(step_.object)) return *lit;
    if (auto lit = LiteralOf(step_.object2)) return *lit;
    return counter.Next();
  }

  ResolutionResult ResolveGroup(ActionGroup group, InputCounter& counter) {
    const std::vector<std::string> objects = Concat({&object_, &object2_});
    auto simple = [](EventKind kind) {
      ResolutionResult r;
      r.outcome = Outcome::kResolved;
      r.interaction = {{kind, std::nullopt}, ""};
      r.detail = "event";
      return r;
    };
    switch (group) {
      case ActionGroup::kOpen:
        if (object_.empty() || cfg_.Mentions(object_, "app")) return simple(EventKind::kOpenApp);
        return ResolveClickComponent(EventKind::kTap);
      case ActionGroup::kClick: {
        if (IsBack()) return simple(EventKind::kTapBack);
        if (cfg_.Mentions(objects, "menu")) return ResolveClickComponent(EventKind::kTapMenu);
        return ResolveClickComponent(EventKind::kTap);
      }
      case ActionGroup::kLongClick:
        return ResolveClickComponent(EventKind::kLongTap);
      case ActionGroup::kType:
        return ResolveTypeComponent(counter);
      case ActionGroup::kSwipe:
        if (cfg_.Mentions(objects, "down")) return simple(EventKind::kSwipeDown);
        if (cfg_.Mentions(objects, "left")) return simple(EventKind::kSwipeLeft);
        if (cfg_.Mentions(objects, "right")) return simple(EventKind::kSwipeRight);
        return simple(EventKind::kSwipeUp);
      case ActionGroup::kRotate:
        if (cfg_.Mentions(objects, "portrait")) return simple(EventKind::kRotatePortrait);
        return simple(EventKind::kRotateLandscape);
    }
    return {};
  }

  bool IsBack() const {
    if (cfg_.Mentions(action_, "back")) return true;
    std::vector<std::string> rest = cfg_.WithoutTypeWords(object_);
    if (rest.empty()) return false;
    return std::all_of(rest.begin(), rest.end(), [&](const std::string& t) {
      return cfg_.Mentions({t}, "back");
    });
  }

  // Verbs listed in several groups: orientation words pick ROTATE, literals
  // pick TYPE, component-type words pick TYPE or CLICK, and otherwise both
  // readings are tried on the screen.
  ResolutionResult ResolveAmbiguousGroups(std::vector<ActionGroup> groups, InputCounter& counter) {
    const std::vector<std::string> objects = Concat({&object_, &object2_});
    auto has = [&](ActionGroup g) { return std::find(groups.begin(), groups.end(), g) != groups.end(); };
    if (has(ActionGroup::kRotate)) {
      if (cfg_.Mentions(objects, "landscape") || cfg_.Mentions(objects, "portrait")) {
        return ResolveGroup(ActionGroup::kRotate, counter);
      }
      std::erase(groups, ActionGroup::kRotate);
    }
    if (groups.size() == 1) return ResolveGroup(groups[0], counter);
    if (has(ActionGroup::kType) && has(ActionGroup::kClick)) {
      if (LiteralOf(step_.object) || LiteralOf(step_.object2)) {
        return ResolveGroup(ActionGroup::kType, counter);
      }
      if (auto type = cfg_.NamedType(objects)) {
        return ResolveGroup(
            *type == ComponentType::kTextField ? ActionGroup::kType : ActionGroup::kClick, counter);
      }
      InputCounter type_counter = counter;
      ResolutionResult as_type = ResolveGroup(ActionGroup::kType, type_counter);
      InputCounter click_counter = counter;
      ResolutionResult as_click = ResolveGroup(ActionGroup::kClick, click_counter);
      bool type_ok = as_type.outcome == Outcome::kResolved;
      bool click_ok = as_click.outcome == Outcome::kResolved;
      if (type_ok && (!click_ok ||
                      as_click.interaction.component_id == as_type.interaction.component_id)) {
        counter = type_counter;
        return as_type;
      }
      if (click_ok && !type_ok) {
        counter = click_counter;
        return as_click;
      }
      if (type_ok && click_ok) {
        ResolutionResult r;
        r.outcome = Outcome::kMultipleMatch;
        r.failed = {"action"};
        r.detail = "the verb names several events";
        for (const ResolutionResult* alt : {&as_type, &as_click}) {
          const GuiComponent* c = screen_.Find(alt->interaction.component_id);
          r.candidates.push_back({alt->interaction.event.kind, alt->interaction.component_id,
                                  c ? LabelOf(*c) : "", 1.0});
        }
        return r;
      }
      if (as_type.outcome == Outcome::kMultipleMatch) return as_type;
      return as_click;
    }
    return ResolveGroup(groups[0], counter);
  }

  // Verbs outside every group are treated as feature names.
  ResolutionResult ResolveFeature(InputCounter& counter) {
    ComponentMatch m = MatchComponent(Concat({&action_, &object_, &object2_}), enabled_,
                                      EventKind::kTap, cfg_);
    if (m.kind == ComponentMatch::Kind::kMismatch) {
      m = MatchComponent(action_, enabled_, EventKind::kTap, cfg_);
    }
    if (m.kind == ComponentMatch::Kind::kMultiple) return FromMatch(m, EventKind::kTap, {"action"});
    ResolutionResult r;
    r.failed = {"action"};
    if (m.kind == ComponentMatch::Kind::kMatch) {
      const ComponentFlags& f = m.component->flags;
      EventKind kind;
      if (f.typeable) {
        kind = EventKind::kType;
      } else if (f.tappable || f.checkable || f.pickable) {
        kind = EventKind::kTap;
      } else if (f.long_tappable) {
        kind = EventKind::kLongTap;
      } else {
        r.detail = "the matched component accepts no event";
        return r;
      }
      r.outcome = Outcome::kResolved;
      r.failed.clear();
      r.interaction = {{kind, std::nullopt}, m.component->id};
      if (kind == EventKind::kType) r.interaction.event.input = ResolveInput(counter);
      r.detail = "feature:" + m.rule;
      return r;
    }
    r.detail = "\"" + step_.action + "\" names no app event or feature";
    return r;
  }

  const S2R& step_;
  const ScreenInstance& screen_;
  const MatchConfig& cfg_;
  const std::vector<std::string> action_;
  const std::vector<std::string> object_;
  const std::vector<std::string> object2_;
  std::vector<const GuiComponent*> enabled_;
};

}  // namespace

double Similarity(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0.0;
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  std::size_t best = 0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : 0;
      best = std::max(best, cur[j]);
    }
    std::swap(prev, cur);
  }
  return static_cast<double>(best) / ((static_cast<double>(a.size()) + b.size()) / 2.0);
}

ComponentMatch MatchComponent(const std::vector<std::string>& query,
                              const std::vector<const GuiComponent*>& components,
                              EventKind event, const MatchConfig& cfg) {
  ComponentMatch first = MatchOnce(query, components, event, cfg);
  if (first.kind != ComponentMatch::Kind::kMismatch) return first;
  // Query replacement: one new query per synonym, in table order.
  for (const auto& [term, replacements] : cfg.synonyms) {
    std::vector<std::string> phrase = Terms(term);
    std::size_t at = 0;
    if (!ContainsPhrase(query, phrase, &at)) continue;
    for (const auto& replacement : replacements) {
      std::vector<std::string> q(query.begin(), query.begin() + static_cast<long>(at));
      for (auto& t : Terms(replacement)) q.push_back(std::move(t));
      q.insert(q.end(), query.begin() + static_cast<long>(at + phrase.size()), query.end());
      ComponentMatch m = MatchOnce(q, components, event, cfg);
      if (m.kind == ComponentMatch::Kind::kMatch) {
        m.rule = "synonym:" + term + "->" + replacement + "/" + m.rule;
        return m;
      }
    }
  }
  return first;
}

std::string_view OutcomeName(ResolutionResult::Outcome outcome) {
  switch (outcome) {
    case Outcome::kResolved: return "resolved";
    case Outcome::kMismatch: return "mismatch";
    case Outcome::kMultipleMatch: return "multiple-match";
  }
  return "mismatch";
}

ResolutionResult ResolveStep(const S2R& step, const ScreenInstance& screen,
                             const MatchConfig& cfg, InputCounter& counter) {
  return StepResolver(step, screen, cfg).Resolve(counter);
}

}  // namespace reprolint
