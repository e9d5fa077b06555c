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

#ifndef REPROLINT_LEXICON_H_
#define REPROLINT_LEXICON_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "reprolint/text.h"

namespace reprolint {

// Word -> (lemma, candidate tags). The first tag is the preferred reading.
struct LexEntry {
  std::string lemma;
  std::vector<Pos> tags;

  bool has(Pos pos) const;
  Pos primary() const { return tags.empty() ? Pos::kOther : tags.front(); }
};

// Shipped GUI-vocabulary lexicon with rule-based fallback for inflections.
class Lexicon {
 public:
  // Parses entries of the form "word/TAGS[/lemma]" separated by whitespace.
  // TAGS is a string over V N P A R D J M (verb noun pron adp adv det adj num).
  explicit Lexicon(std::string_view table);

  // The built-in lexicon.
  static const Lexicon& Default();
  // Built-in lexicon with `table` entries taking precedence.
  static Lexicon WithOverrides(std::string_view table);
  // Lexicon used by Tokenize on this thread.
  static const Lexicon& Active();

  // Exact lookup of a lowercase word.
  const LexEntry* Find(std::string_view word) const;

  // Lookup with suffix stripping ("entries" -> "entry", "tapped" -> "tap").
  // Unknown words get a rule-stripped lemma and a suffix-guessed tag.
  LexEntry Analyze(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::optional<LexEntry> Stripped(std::string_view word) const;

  std::unordered_map<std::string, LexEntry> entries_;
};

// Makes `lexicon` the active one on this thread for the guard's lifetime.
class ScopedLexicon {
 public:
  explicit ScopedLexicon(const Lexicon& lexicon);
  ~ScopedLexicon();
  ScopedLexicon(const ScopedLexicon&) = delete;
  ScopedLexicon& operator=(const ScopedLexicon&) = delete;

 private:
  const Lexicon* previous_;
};

// Raw table used by Lexicon::Default().
std::string_view DefaultLexiconTable();

}  // namespace reprolint

#endif  // REPROLINT_LEXICON_H_
