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

#include "reprolint/lexicon.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "reprolint/error.h"

namespace reprolint {
namespace {

Pos TagFromChar(char c) {
  switch (c) {
    case 'V': return Pos::kVerb;
    case 'N': return Pos::kNoun;
    case 'P': return Pos::kPron;
    case 'A': return Pos::kAdp;
    case 'R': return Pos::kAdv;
    case 'D': return Pos::kDet;
    case 'J': return Pos::kAdj;
    case 'M': return Pos::kNum;
    case 'O': return Pos::kOther;
  }
  throw InputError(std::string("unknown lexicon tag '") + c + "'");
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool HasVowel(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return IsVowel(c) || c == 'y'; });
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// "tapp" -> "tap", "logg" -> "log"; empty when the stem is not doubled.
std::string Undouble(std::string_view stem) {
  if (stem.size() >= 3 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
      !IsVowel(stem.back()) && stem.back() != 's' && stem.back() != 'l') {
    return std::string(stem.substr(0, stem.size() - 1));
  }
  // "scroll", "fill" keep their double consonant.
  return {};
}

struct Candidate {
  std::string stem;
  Pos needs;  // tag the lexicon entry must allow
  bool verbal = false;  // -ed/-ing: the verb reading becomes primary
};

std::vector<Candidate> StripCandidates(std::string_view w) {
  std::vector<Candidate> out;
  auto add = [&](std::string stem, Pos needs, bool verbal = false) {
    if (!stem.empty()) out.push_back({std::move(stem), needs, verbal});
  };
  if (EndsWith(w, "ies") && w.size() > 4) {
    add(std::string(w.substr(0, w.size() - 3)) + "y", Pos::kNoun);
    add(std::string(w.substr(0, w.size() - 3)) + "y", Pos::kVerb);
  }
  if (EndsWith(w, "ied") && w.size() > 4) {
    add(std::string(w.substr(0, w.size() - 3)) + "y", Pos::kVerb, true);
  }
  if (EndsWith(w, "es") && w.size() > 3) {
    add(std::string(w.substr(0, w.size() - 2)), Pos::kNoun);
    add(std::string(w.substr(0, w.size() - 2)), Pos::kVerb);
  }
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && w.size() > 2) {
    add(std::string(w.substr(0, w.size() - 1)), Pos::kNoun);
    add(std::string(w.substr(0, w.size() - 1)), Pos::kVerb);
  }
  for (std::string_view suffix : {std::string_view("ed"), std::string_view("ing")}) {
    if (EndsWith(w, suffix) && w.size() > suffix.size() + 1) {
      std::string stem(w.substr(0, w.size() - suffix.size()));
      add(stem, Pos::kVerb, true);
      add(stem + "e", Pos::kVerb, true);
      add(Undouble(stem), Pos::kVerb, true);
    }
  }
  return out;
}

// Rule-only lemma for words the lexicon does not know.
std::string BlindStrip(std::string_view w) {
  auto cut = [&](std::size_t n) { return std::string(w.substr(0, w.size() - n)); };
  if (w.size() > 4 && (EndsWith(w, "ies") || EndsWith(w, "ied"))) return cut(3) + "y";
  if (w.size() > 4 && EndsWith(w, "sses")) return cut(2);
  if (w.size() > 4 && (EndsWith(w, "xes") || EndsWith(w, "ches") || EndsWith(w, "shes") ||
                       EndsWith(w, "zes"))) {
    return cut(2);
  }
  if (w.size() > 3 && EndsWith(w, "s") && !EndsWith(w, "ss") && !EndsWith(w, "us") &&
      !EndsWith(w, "is")) {
    return cut(1);
  }
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    std::string_view suffix = n == 2 ? "ed" : "ing";
    if (EndsWith(w, suffix) && w.size() >= n + 3 && HasVowel(w.substr(0, w.size() - n))) {
      std::string stem = cut(n);
      std::string undoubled = Undouble(stem);
      return undoubled.empty() ? stem : undoubled;
    }
  }
  return std::string(w);
}

Pos GuessTag(std::string_view w) {
  if (EndsWith(w, "ly") && w.size() > 4) return Pos::kAdv;
  if ((EndsWith(w, "ed") || EndsWith(w, "ing")) && w.size() > 4) return Pos::kVerb;
  return Pos::kNoun;
}

}  // namespace

bool LexEntry::has(Pos pos) const {
  return std::find(tags.begin(), tags.end(), pos) != tags.end();
}

Lexicon::Lexicon(std::string_view table) {
  std::istringstream in{std::string(table)};
  std::string item;
  while (in >> item) {
    auto first = item.find('/');
    if (first == std::string::npos || first == 0) {
      throw InputError("malformed lexicon entry: " + item);
    }
    auto second = item.find('/', first + 1);
    std::string word = item.substr(0, first);
    std::string tags = item.substr(first + 1, second == std::string::npos
                                                  ? std::string::npos
                                                  : second - first - 1);
    LexEntry entry;
    entry.lemma = second == std::string::npos ? word : item.substr(second + 1);
    for (char c : tags) entry.tags.push_back(TagFromChar(c));
    // First listing wins.
    entries_.emplace(std::move(word), std::move(entry));
  }
}

const Lexicon& Lexicon::Default() {
  static const Lexicon lexicon(DefaultLexiconTable());
  return lexicon;
}

Lexicon Lexicon::WithOverrides(std::string_view table) {
  // First listing wins, so the overrides go first.
  return Lexicon(std::string(table) + "\n" + std::string(DefaultLexiconTable()));
}

namespace {
thread_local const Lexicon* active_lexicon = nullptr;
}  // namespace

const Lexicon& Lexicon::Active() { return active_lexicon ? *active_lexicon : Default(); }

ScopedLexicon::ScopedLexicon(const Lexicon& lexicon) : previous_(active_lexicon) {
  active_lexicon = &lexicon;
}

ScopedLexicon::~ScopedLexicon() { active_lexicon = previous_; }

const LexEntry* Lexicon::Find(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<LexEntry> Lexicon::Stripped(std::string_view word) const {
  for (const Candidate& c : StripCandidates(word)) {
    const LexEntry* e = Find(c.stem);
    if (e == nullptr || !e->has(c.needs)) continue;
    LexEntry out = *e;
    if (c.verbal) {
      std::stable_partition(out.tags.begin(), out.tags.end(),
                            [](Pos p) { return p == Pos::kVerb; });
    }
    return out;
  }
  return std::nullopt;
}

LexEntry Lexicon::Analyze(std::string_view word) const {
  std::string lower = ToLower(word);
  if (const LexEntry* e = Find(lower)) return *e;
  if (auto e = Stripped(lower)) return *e;
  // Hyphenated compounds: analyze the head (last part).
  if (auto dash = lower.rfind('-'); dash != std::string::npos && dash + 1 < lower.size()) {
    LexEntry head = Analyze(std::string_view(lower).substr(dash + 1));
    head.lemma = lower.substr(0, dash + 1) + head.lemma;
    return head;
  }
  return LexEntry{BlindStrip(lower), {GuessTag(lower)}};
}

}  // namespace reprolint
