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

#ifndef REPROLINT_TEXT_H_
#define REPROLINT_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace reprolint {

// Coarse part-of-speech tags. LITERAL marks quoted text and numerals.
enum class Pos { kVerb, kNoun, kPron, kAdp, kAdv, kDet, kAdj, kNum, kLiteral, kOther };

std::string_view PosName(Pos pos);

// Half-open byte range [begin, end).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

struct Token {
  std::string surface;
  std::string lemma;  // always lowercase
  Pos pos = Pos::kOther;
  Span span;  // offsets into the owning sentence's raw text

  bool is_literal() const { return pos == Pos::kLiteral; }
  bool is_punct() const;
  // Text of a literal with surrounding quotes removed; surface otherwise.
  std::string literal_value() const;

  bool operator==(const Token&) const = default;
};

enum class SentenceKind { kImperative, kConditional, kDeclarative, kPassive, kOther };

std::string_view SentenceKindName(SentenceKind kind);

struct Sentence {
  std::string raw;
  std::vector<Token> tokens;
  SentenceKind kind = SentenceKind::kOther;
  Span span;  // offsets into the report body

  bool operator==(const Sentence&) const = default;
};

struct Paragraph {
  std::vector<Sentence> sentences;
  Span span;

  bool operator==(const Paragraph&) const = default;
};

struct BugReport {
  std::string id;
  std::string title;
  std::string body;
  std::vector<Paragraph> paragraphs;

  std::size_t sentence_count() const;
  // Sentences in textual order across paragraphs.
  std::vector<const Sentence*> sentences() const;
};

// Tokenizes one sentence. Quoted spans and numerals become single LITERAL
// tokens; every token carries a lowercase lemma and a coarse tag.
std::vector<Token> Tokenize(std::string_view sentence_text);

// Splits raw text into paragraphs and sentences. Blank lines separate
// paragraphs; list items ("1.", "2)", "-", "*", "+") form their own
// paragraph; line breaks and terminal punctuation outside quotes end
// sentences. A leading "Title:" line becomes the title.
// Throws EmptyReportError when there is no text.
BugReport ParseReport(std::string_view raw);

// Plain-text rendering that ParseReport maps back to the same structure.
std::string RenderReportText(const BugReport& report);

// Rebuilds a sentence from its token surfaces and the whitespace between them.
std::string ReconstructSentence(const Sentence& sentence);

// Lemma sequence for arbitrary text (component labels, ids, keywords).
// Identifiers are split on '_', '-', '.' and camelCase boundaries, punctuation
// is dropped and literal tokens are expanded into their words.
std::vector<std::string> Terms(std::string_view text);

// Lemma sequence for tokens; literals expand into their words.
std::vector<std::string> Terms(const std::vector<Token>& tokens);

std::string ToLower(std::string_view text);

}  // namespace reprolint

#endif  // REPROLINT_TEXT_H_
