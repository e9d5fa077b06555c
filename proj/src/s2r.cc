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

#include "reprolint/s2r.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "reprolint/error.h"

namespace reprolint {
namespace {

using WordSet = std::set<std::string, std::less<>>;

const WordSet kSubordinators = {"when", "whenever", "if", "after", "once", "before", "while",
                                "until"};
const WordSet kFillers = {"please", "then", "and", "or", "so", "also", "next", "now",
                          "first", "finally", "just", "again", "afterwards", "afterward",
                          "later", "lastly", "firstly", "secondly", "simply"};
const WordSet kSubjectWords = {"i", "you", "we", "they", "he", "she", "user", "one"};
const WordSet kAuxiliaries = {"can", "could", "will", "would", "should", "must", "may",
                              "might", "shall", "do", "have", "be", "'ll", "get"};
const WordSet kCatenatives = {"try", "want", "need", "attempt", "start", "begin",
                              "continue", "keep", "go"};
// Verbs that describe what the reporter observes rather than does.
const WordSet kObservationVerbs = {
    "see", "notice", "observe", "get", "receive", "appear", "disappear", "show",
    "display", "crash", "freeze", "hang", "fail", "happen", "occur", "seem",
    "become", "look", "expect", "want", "think", "know", "feel", "like", "love",
    "hate", "need", "be", "have", "work", "believe", "realize", "find", "lose",
    "stop", "remain", "stay", "include", "contain"};
// Observed/expected-behavior cues.
const WordSet kBehaviorCues = {"should", "expect", "expected", "supposed", "instead",
                               "show", "appear", "display"};
const WordSet kContinuations = {"then", "and", "next", "afterwards", "afterward", "also"};
const WordSet kJoiners = {"and", "then", "or", "but"};

bool IsNounPhrasePart(const Token& t) {
  return t.pos == Pos::kDet || t.pos == Pos::kAdj || t.pos == Pos::kNoun ||
         t.pos == Pos::kLiteral || t.pos == Pos::kNum;
}

bool IsFiller(const Token& t) {
  return t.is_punct() || t.pos == Pos::kAdv || kFillers.contains(t.lemma);
}

struct Clause {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string subordinator;
};

std::size_t SkipFillers(const std::vector<Token>& t, std::size_t k, std::size_t end) {
  while (k < end && IsFiller(t[k])) ++k;
  return k;
}

std::size_t SkipAdverbs(const std::vector<Token>& t, std::size_t k, std::size_t end) {
  while (k < end && (t[k].pos == Pos::kAdv || t[k].lemma == "not")) ++k;
  return k;
}

// Position after a subject ("I", "you", "the user"), or `k` when none.
std::size_t SkipSubject(const std::vector<Token>& t, std::size_t k, std::size_t end) {
  std::size_t j = k;
  if (j < end && t[j].pos == Pos::kDet && j + 1 < end && kSubjectWords.contains(t[j + 1].lemma)) {
    ++j;
  }
  if (j < end && kSubjectWords.contains(t[j].lemma)) return j + 1;
  return k;
}

bool StartsWithSubject(const std::vector<Token>& t, std::size_t k, std::size_t end) {
  return SkipSubject(t, k, end) != k;
}

// From a verb position, moves past auxiliaries and catenatives to the
// content verb: "can tap", "try to save", "start typing".
std::size_t ContentVerb(const std::vector<Token>& t, std::size_t v, std::size_t end) {
  for (int guard = 0; guard < 4 && v < end; ++guard) {
    const std::string& lemma = t[v].lemma;
    if (kAuxiliaries.contains(lemma)) {
      std::size_t n = SkipAdverbs(t, v + 1, end);
      if (n < end && t[n].pos == Pos::kVerb) {
        v = n;
        continue;
      }
      return v;
    }
    if (kCatenatives.contains(lemma)) {
      std::size_t n = SkipAdverbs(t, v + 1, end);
      if (n + 1 < end && t[n].lemma == "to" && t[n + 1].pos == Pos::kVerb) {
        v = n + 1;
        continue;
      }
      if (n < end && t[n].pos == Pos::kVerb && t[n].surface.ends_with("ing")) {
        v = n;
        continue;
      }
    }
    return v;
  }
  return v;
}

// Collects a noun phrase starting at `j`; determiners are dropped.
std::vector<Token> NounPhrase(const std::vector<Token>& t, std::size_t& j, std::size_t end) {
  std::vector<Token> out;
  while (j < end && IsNounPhrasePart(t[j])) {
    if (t[j].pos != Pos::kDet) out.push_back(t[j]);
    ++j;
  }
  return out;
}

S2R ArgumentsAfterVerb(const std::vector<Token>& t, std::size_t v, std::size_t end) {
  S2R step;
  step.action = t[v].lemma;
  std::size_t j = SkipAdverbs(t, v + 1, end);
  while (j < end && t[j].pos == Pos::kPron) ++j;
  step.object = NounPhrase(t, j, end);
  j = SkipAdverbs(t, j, end);
  // A stranded preposition names the target itself ("tap about").
  if (step.object.empty() && j < end && t[j].pos == Pos::kAdp &&
      (j + 1 == end || t[j + 1].is_punct())) {
    Token as_noun = t[j];
    as_noun.pos = Pos::kNoun;
    step.object.push_back(as_noun);
    return step;
  }
  if (j < end && t[j].pos == Pos::kAdp) {
    step.preposition = t[j];
    ++j;
    step.object2 = NounPhrase(t, j, end);
  }
  return step;
}

std::vector<Clause> SplitClauses(const std::vector<Token>& t) {
  std::vector<Clause> clauses;
  Clause current;
  auto close = [&](std::size_t at) {
    current.end = at;
    bool has_content = false;
    for (std::size_t k = current.begin; k < current.end; ++k) {
      if (!t[k].is_punct()) has_content = true;
    }
    if (has_content) clauses.push_back(current);
  };
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Token& tok = t[i];
    if (kSubordinators.contains(tok.lemma)) {
      close(i);
      current = Clause{i + 1, 0, tok.lemma};
    } else if (tok.surface == "," || tok.surface == ";" || tok.surface == ":") {
      close(i);
      current = Clause{i + 1, 0, ""};
    } else if (kJoiners.contains(tok.lemma) && i > current.begin) {
      std::size_t j = SkipAdverbs(t, i + 1, t.size());
      while (j < t.size() && kFillers.contains(t[j].lemma)) ++j;
      bool verb_next = j < t.size() && t[j].pos == Pos::kVerb;
      bool subject_next = StartsWithSubject(t, j, t.size());
      if (verb_next || subject_next) {
        close(i);
        current = Clause{i + 1, 0, tok.lemma == "but" ? "but" : ""};
      }
    }
  }
  close(t.size());
  return clauses;
}

enum class ClauseOutcome { kStep, kNoVerb, kNotAction };

struct ClauseAnalysis {
  ClauseOutcome outcome = ClauseOutcome::kNoVerb;
  SentenceKind kind = SentenceKind::kOther;
  S2R step;
};

ClauseAnalysis AnalyzeClause(const std::vector<Token>& t, const Clause& c) {
  ClauseAnalysis out;
  std::size_t k = SkipFillers(t, c.begin, c.end);
  if (k >= c.end) return out;
  bool has_verb = std::any_of(t.begin() + static_cast<std::ptrdiff_t>(k),
                              t.begin() + static_cast<std::ptrdiff_t>(c.end),
                              [](const Token& x) { return x.pos == Pos::kVerb; });
  if (!has_verb) return out;
  out.outcome = ClauseOutcome::kNotAction;
  if (c.subordinator == "but") return out;

  auto take = [&](std::size_t v, SentenceKind kind) {
    v = ContentVerb(t, v, c.end);
    if (t[v].pos != Pos::kVerb || kObservationVerbs.contains(t[v].lemma)) return;
    out.outcome = ClauseOutcome::kStep;
    out.kind = kind;
    out.step = ArgumentsAfterVerb(t, v, c.end);
  };

  if (!c.subordinator.empty()) {
    std::size_t v = SkipAdverbs(t, SkipSubject(t, k, c.end), c.end);
    if (v < c.end && t[v].pos == Pos::kVerb) take(v, SentenceKind::kConditional);
    return out;
  }
  if (t[k].pos == Pos::kVerb) {
    if (!kAuxiliaries.contains(t[k].lemma)) take(k, SentenceKind::kImperative);
    return out;
  }
  if (StartsWithSubject(t, k, c.end)) {
    std::size_t v = SkipAdverbs(t, SkipSubject(t, k, c.end), c.end);
    if (v < c.end && t[v].pos == Pos::kVerb) take(v, SentenceKind::kDeclarative);
    return out;
  }
  // Agentless passive: "<noun phrase> is <verb>ed".
  std::size_t j = k;
  std::vector<Token> subject = NounPhrase(t, j, c.end);
  j = SkipAdverbs(t, j, c.end);
  if (!subject.empty() && j + 1 < c.end && t[j].lemma == "be") {
    std::size_t v = SkipAdverbs(t, j + 1, c.end);
    if (v < c.end && t[v].pos == Pos::kVerb && !kObservationVerbs.contains(t[v].lemma) &&
        (t[v].surface.ends_with("ed") || t[v].surface.ends_with("en"))) {
      out.outcome = ClauseOutcome::kStep;
      out.kind = SentenceKind::kPassive;
      out.step.action = t[v].lemma;
      out.step.object = std::move(subject);
      std::size_t n = SkipAdverbs(t, v + 1, c.end);
      if (n < c.end && t[n].pos == Pos::kAdp && t[n].lemma != "by") {
        out.step.preposition = t[n];
        ++n;
        out.step.object2 = NounPhrase(t, n, c.end);
      }
    }
  }
  return out;
}

bool HasConditionalStep(const std::vector<Token>& t) {
  for (const Clause& c : SplitClauses(t)) {
    if (c.subordinator.empty() || c.subordinator == "but") continue;
    if (AnalyzeClause(t, c).outcome == ClauseOutcome::kStep) return true;
  }
  return false;
}

}  // namespace

std::string_view LabelName(SentenceLabel label) {
  switch (label) {
    case SentenceLabel::kBegin: return "B-S2R";
    case SentenceLabel::kInside: return "I-S2R";
    case SentenceLabel::kOutside: return "O";
  }
  return "O";
}

void RepairLabels(std::vector<SentenceLabel>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == SentenceLabel::kInside &&
        (i == 0 || labels[i - 1] == SentenceLabel::kOutside)) {
      labels[i] = SentenceLabel::kBegin;
    }
  }
}

std::string S2R::ToString() const {
  auto join = [](const std::vector<Token>& tokens) {
    std::string s;
    for (const Token& t : tokens) {
      if (!s.empty()) s += ' ';
      s += t.surface;
    }
    return s;
  };
  std::ostringstream out;
  out << '[' << action << "] [" << join(object) << "] ["
      << (preposition ? preposition->surface : "") << "] [" << join(object2) << ']';
  return out.str();
}

bool PatternLabeler::IsStepSentence(const Sentence& sentence) {
  const auto& t = sentence.tokens;
  if (t.empty()) return false;
  if (HasConditionalStep(t)) return true;
  for (const Token& tok : t) {
    if (kBehaviorCues.contains(tok.lemma)) return false;
  }
  for (const Clause& c : SplitClauses(t)) {
    if (!c.subordinator.empty()) continue;
    if (AnalyzeClause(t, c).outcome == ClauseOutcome::kStep) return true;
  }
  return false;
}

std::vector<SentenceLabel> PatternLabeler::Label(const Paragraph& paragraph) {
  std::vector<SentenceLabel> labels;
  labels.reserve(paragraph.sentences.size());
  for (const Sentence& s : paragraph.sentences) {
    if (!IsStepSentence(s)) {
      labels.push_back(SentenceLabel::kOutside);
      continue;
    }
    bool continues = !labels.empty() && labels.back() != SentenceLabel::kOutside &&
                     !s.tokens.empty() && kContinuations.contains(s.tokens.front().lemma);
    labels.push_back(continues ? SentenceLabel::kInside : SentenceLabel::kBegin);
  }
  RepairLabels(labels);
  return labels;
}

SidecarLabeler SidecarLabeler::FromText(std::string_view text) {
  std::vector<SentenceLabel> labels;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string v;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) v.push_back(c);
    }
    if (v.empty() || v[0] == '#') continue;
    if (v == "B" || v == "B-S2R") {
      labels.push_back(SentenceLabel::kBegin);
    } else if (v == "I" || v == "I-S2R") {
      labels.push_back(SentenceLabel::kInside);
    } else if (v == "O") {
      labels.push_back(SentenceLabel::kOutside);
    } else {
      throw LabelFileError("label file line " + std::to_string(line_no) + ": expected B, I or O");
    }
  }
  return SidecarLabeler(std::move(labels));
}

std::vector<SentenceLabel> SidecarLabeler::Label(const Paragraph& paragraph) {
  if (next_ + paragraph.sentences.size() > labels_.size()) {
    throw LabelFileError("label file has fewer labels than the report has sentences");
  }
  std::vector<SentenceLabel> out(labels_.begin() + static_cast<std::ptrdiff_t>(next_),
                                 labels_.begin() +
                                     static_cast<std::ptrdiff_t>(next_ + paragraph.sentences.size()));
  next_ += paragraph.sentences.size();
  RepairLabels(out);
  return out;
}

void SidecarLabeler::CheckExhausted() const {
  if (next_ != labels_.size()) {
    throw LabelFileError("label file has more labels than the report has sentences");
  }
}

std::vector<SentenceLabel> LabelSentences(const BugReport& report, S2RLabeler& labeler) {
  std::vector<SentenceLabel> all;
  for (const Paragraph& p : report.paragraphs) {
    std::vector<SentenceLabel> labels = labeler.Label(p);
    if (labels.size() != p.sentences.size()) {
      throw Error("labeler '" + labeler.name() + "' returned a wrong number of labels");
    }
    all.insert(all.end(), labels.begin(), labels.end());
  }
  return all;
}

ExtractionResult ExtractS2Rs(const Sentence& sentence, std::size_t sentence_index) {
  ExtractionResult result;
  const auto& t = sentence.tokens;
  std::vector<Clause> clauses = SplitClauses(t);
  bool any_verb = false;
  std::optional<std::size_t> main_clause;
  bool conditional = false;
  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    const Clause& c = clauses[ci];
    ClauseAnalysis a = AnalyzeClause(t, c);
    if (a.outcome != ClauseOutcome::kNoVerb) any_verb = true;
    if (c.subordinator.empty()) main_clause = ci;
    if (a.outcome != ClauseOutcome::kStep) continue;
    if (a.kind == SentenceKind::kConditional) conditional = true;
    if (result.steps.empty()) result.kind = a.kind;
    a.step.sentence_index = sentence_index;
    a.step.clause_index = ci;
    if (c.subordinator == "after" && main_clause) a.step.precedes_clause = *main_clause;
    result.steps.push_back(std::move(a.step));
  }
  if (conditional) result.kind = SentenceKind::kConditional;
  if (result.steps.empty()) {
    result.failure = any_verb ? "no actionable clause" : "no verb found";
  }
  return result;
}

std::vector<S2R> OrderS2Rs(std::vector<S2R> steps) {
  auto key = [](const S2R& s) {
    std::size_t anchor = s.precedes_clause.value_or(s.clause_index);
    return std::tuple(s.sentence_index, anchor, s.precedes_clause ? 0 : 1, s.clause_index);
  };
  std::stable_sort(steps.begin(), steps.end(),
                   [&](const S2R& a, const S2R& b) { return key(a) < key(b); });
  for (std::size_t i = 0; i < steps.size(); ++i) steps[i].order_index = i;
  return steps;
}

ExtractedSteps ExtractReportSteps(BugReport& report, S2RLabeler& labeler) {
  ExtractedSteps out;
  out.labels = LabelSentences(report, labeler);
  std::vector<S2R> steps;
  std::size_t index = 0;
  for (Paragraph& p : report.paragraphs) {
    for (Sentence& s : p.sentences) {
      if (out.labels[index] != SentenceLabel::kOutside) {
        ExtractionResult r = ExtractS2Rs(s, index);
        s.kind = r.kind;
        if (r.failure) {
          out.dropped.push_back({index, s.raw, *r.failure});
        }
        for (S2R& step : r.steps) steps.push_back(std::move(step));
      }
      ++index;
    }
  }
  out.steps = OrderS2Rs(std::move(steps));
  return out;
}

}  // namespace reprolint
