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

#ifndef REPROLINT_S2R_H_
#define REPROLINT_S2R_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reprolint/text.h"

namespace reprolint {

enum class SentenceLabel { kBegin, kInside, kOutside };

std::string_view LabelName(SentenceLabel label);  // "B-S2R", "I-S2R", "O"

// Enforces BIO validity in place: an I-S2R at paragraph start or after O
// becomes B-S2R.
void RepairLabels(std::vector<SentenceLabel>& labels);

// One step to reproduce: [action] [object] [preposition] [object2].
struct S2R {
  std::string action;  // verb lemma
  std::vector<Token> object;
  std::optional<Token> preposition;
  std::vector<Token> object2;
  std::size_t sentence_index = 0;  // report-wide sentence position
  std::size_t clause_index = 0;    // position of the clause inside the sentence
  // Set for "x after y" clauses that follow their governing clause: the step
  // must be ordered before clause `*precedes_clause`.
  std::optional<std::size_t> precedes_clause;
  std::size_t order_index = 0;

  std::vector<std::string> object_terms() const { return Terms(object); }
  std::vector<std::string> object2_terms() const { return Terms(object2); }
  std::string preposition_lemma() const { return preposition ? preposition->lemma : ""; }
  // "[create] [entry] [for] [purchase]"
  std::string ToString() const;
  bool operator==(const S2R&) const = default;
};

// Labels the sentences of one paragraph.
class S2RLabeler {
 public:
  virtual ~S2RLabeler() = default;
  virtual std::string name() const = 0;
  // Returns exactly one label per sentence.
  virtual std::vector<SentenceLabel> Label(const Paragraph& paragraph) = 0;
};

// Rule-based labeler over discourse patterns: imperative-initial verbs,
// conditional clauses, first/second-person actions and sequence markers mark
// steps; observed/expected-behavior cues force O.
class PatternLabeler : public S2RLabeler {
 public:
  std::string name() const override { return "discourse-patterns"; }
  std::vector<SentenceLabel> Label(const Paragraph& paragraph) override;

  // Label of a single sentence, ignoring paragraph context (B or O).
  static bool IsStepSentence(const Sentence& sentence);
};

// Replays labels from a sidecar file: one "B", "I" or "O" per line for every
// sentence of the report in order. Blank lines and '#' comments are skipped.
class SidecarLabeler : public S2RLabeler {
 public:
  explicit SidecarLabeler(std::vector<SentenceLabel> labels) : labels_(std::move(labels)) {}
  static SidecarLabeler FromText(std::string_view text);

  std::string name() const override { return "sidecar"; }
  // Consumes labels in order; throws LabelFileError when they run out.
  std::vector<SentenceLabel> Label(const Paragraph& paragraph) override;
  // Throws LabelFileError unless every label was consumed.
  void CheckExhausted() const;

 private:
  std::vector<SentenceLabel> labels_;
  std::size_t next_ = 0;
};

// Per-sentence labels for the whole report, in sentence order, repaired.
std::vector<SentenceLabel> LabelSentences(const BugReport& report, S2RLabeler& labeler);

struct ExtractionResult {
  std::vector<S2R> steps;
  SentenceKind kind = SentenceKind::kOther;
  std::optional<std::string> failure;  // set when no verb could be extracted
};

// Grammatical extraction of the steps contained in one sentence.
// `sentence_index` is copied into every produced S2R.
ExtractionResult ExtractS2Rs(const Sentence& sentence, std::size_t sentence_index = 0);

// Textual order (sentence, clause) except "x after y" clauses, which move
// before the clause they follow. Assigns contiguous order_index values.
std::vector<S2R> OrderS2Rs(std::vector<S2R> steps);

struct DroppedSentence {
  std::size_t sentence_index = 0;
  std::string text;
  std::string reason;
};

struct ExtractedSteps {
  std::vector<SentenceLabel> labels;
  std::vector<S2R> steps;  // ordered
  std::vector<DroppedSentence> dropped;
};

// label -> extract -> order over a whole report.
ExtractedSteps ExtractReportSteps(BugReport& report, S2RLabeler& labeler);

}  // namespace reprolint

#endif  // REPROLINT_S2R_H_
