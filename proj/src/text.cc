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

#include "reprolint/text.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <set>

#include "reprolint/error.h"
#include "reprolint/hash.h"
#include "reprolint/lexicon.h"

namespace reprolint {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool IsAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool IsUpper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }

// UTF-8 typographic quotes: U+2018 U+2019 U+201C U+201D.
constexpr std::string_view kLeftSingle = "\xE2\x80\x98";
constexpr std::string_view kRightSingle = "\xE2\x80\x99";
constexpr std::string_view kLeftDouble = "\xE2\x80\x9C";
constexpr std::string_view kRightDouble = "\xE2\x80\x9D";

struct QuoteMark {
  std::size_t width = 0;
  std::array<std::string_view, 2> closers;
};

// Quote opening at `i`, if any.
std::optional<QuoteMark> OpeningQuote(std::string_view s, std::size_t i) {
  std::string_view rest = s.substr(i);
  if (rest.starts_with('\'')) return QuoteMark{1, {"'", kRightSingle}};
  if (rest.starts_with('"')) return QuoteMark{1, {"\"", kRightDouble}};
  if (rest.starts_with('`')) return QuoteMark{1, {"`", "`"}};
  if (rest.starts_with(kLeftSingle)) return QuoteMark{3, {kRightSingle, "'"}};
  if (rest.starts_with(kLeftDouble)) return QuoteMark{3, {kRightDouble, "\""}};
  return std::nullopt;
}

bool IsBoundaryBefore(std::string_view s, std::size_t i) {
  if (i == 0) return true;
  char p = s[i - 1];
  return IsSpace(p) || p == '(' || p == '[' || p == '{' || p == ':' || p == ',' || p == '=';
}

bool IsBoundaryAfter(std::string_view s, std::size_t i) {
  return i >= s.size() || !IsAlnum(s[i]);
}

// End offset (one past the closing quote) of a quoted span starting at `i`.
std::optional<std::size_t> QuotedSpanEnd(std::string_view s, std::size_t i) {
  if (!IsBoundaryBefore(s, i)) return std::nullopt;
  auto mark = OpeningQuote(s, i);
  if (!mark) return std::nullopt;
  for (std::size_t j = i + mark->width; j < s.size(); ++j) {
    for (std::string_view closer : mark->closers) {
      if (s.substr(j).starts_with(closer) && IsBoundaryAfter(s, j + closer.size())) {
        if (j == i + mark->width) return std::nullopt;  // empty quotes
        return j + closer.size();
      }
    }
  }
  return std::nullopt;
}

bool IsWordByte(char c) {
  return IsAlnum(c) || (static_cast<unsigned char>(c) >= 0x80);
}

bool StartsTypographicQuote(std::string_view s, std::size_t i) {
  std::string_view rest = s.substr(i);
  return rest.starts_with(kLeftSingle) || rest.starts_with(kRightSingle) ||
         rest.starts_with(kLeftDouble) || rest.starts_with(kRightDouble);
}

std::size_t WordEnd(std::string_view s, std::size_t i) {
  std::size_t j = i;
  while (j < s.size()) {
    if (StartsTypographicQuote(s, j)) break;
    if (IsWordByte(s[j])) {
      ++j;
    } else if ((s[j] == '\'' || s[j] == '-' || s[j] == '_') && j + 1 < s.size() &&
               IsAlnum(s[j + 1]) && j > i) {
      ++j;
    } else {
      break;
    }
  }
  return j;
}

std::size_t NumeralEnd(std::string_view s, std::size_t i) {
  std::size_t j = i;
  while (j < s.size() && IsDigit(s[j])) ++j;
  while (j + 1 < s.size() && (s[j] == '.' || s[j] == ',' || s[j] == ':') && IsDigit(s[j + 1])) {
    ++j;
    while (j < s.size() && IsDigit(s[j])) ++j;
  }
  return j;
}

const std::set<std::string, std::less<>> kSubjects = {"i", "you", "we", "they", "he", "she", "it"};
const std::set<std::string, std::less<>> kAuxiliaries = {
    "can", "could", "will", "would", "should", "must", "may", "might", "shall",
    "do", "did", "does", "'ll", "be", "have"};
const std::set<std::string, std::less<>> kCatenatives = {
    "try", "want", "need", "attempt", "able", "go", "have", "start", "begin", "how",
    "keep", "stop", "continue", "finish"};
const std::set<std::string, std::less<>> kClauseJoins = {"and", "then", "or", "but", "so",
                                                         "please", "next", "now", "also",
                                                         "first", "finally", "again"};

bool IsPunctToken(const Token& t) {
  return t.pos == Pos::kOther &&
         std::none_of(t.surface.begin(), t.surface.end(), IsWordByte);
}

struct Analyzed {
  Token token;
  LexEntry entry;
};

std::optional<std::size_t> PrevContent(const std::vector<Analyzed>& a, std::size_t i) {
  while (i > 0) {
    --i;
    if (a[i].token.pos == Pos::kAdv) continue;
    return i;
  }
  return std::nullopt;
}

bool AtClauseStart(const std::vector<Analyzed>& a, std::size_t i) {
  for (std::size_t k = i; k-- > 0;) {
    const Token& t = a[k].token;
    if (t.surface == ";" || t.surface == ":" || t.surface == "(") return true;
    if (IsPunctToken(t)) continue;
    if (t.pos == Pos::kAdv) continue;
    if (t.lemma == "then" || t.lemma == "please") return true;
    if (kClauseJoins.contains(t.lemma)) continue;
    return false;
  }
  return true;
}

bool IsNominal(Pos p) {
  return p == Pos::kDet || p == Pos::kAdj || p == Pos::kAdp || p == Pos::kNum;
}

Pos NonVerbReading(const LexEntry& e) {
  for (Pos p : e.tags) {
    if (p != Pos::kVerb) return p;
  }
  return Pos::kNoun;
}

bool EndsWithS(std::string_view s) {
  return !s.empty() && (s.back() == 's' || s.back() == 'S');
}

bool IsParticiple(std::string_view surface) {
  std::string lower = ToLower(surface);
  return lower.ends_with("ed") || lower.ends_with("en") || lower.ends_with("wn");
}

// Picks one tag for each token using its neighbours.
void Disambiguate(std::vector<Analyzed>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Token& t = a[i].token;
    if (t.pos == Pos::kLiteral || IsPunctToken(t)) continue;
    const LexEntry& e = a[i].entry;
    if (e.tags.size() <= 1 || !e.has(Pos::kVerb)) {
      t.pos = e.primary();
      // A verb-only word right after an action verb, heading a noun, is a
      // modifier: "tap delete entry".
      if (t.pos == Pos::kVerb) {
        auto p = PrevContent(a, i);
        // After a determiner it names something: "the cancel button".
        if (p && *p + 1 == i && a[*p].token.pos == Pos::kDet) {
          t.pos = Pos::kNoun;
          continue;
        }
        bool after_action = p && a[*p].token.pos == Pos::kVerb && *p + 1 == i &&
                            !kAuxiliaries.contains(a[*p].token.lemma) &&
                            !kCatenatives.contains(a[*p].token.lemma);
        if (after_action && !IsParticiple(t.surface) && !t.surface.ends_with("ing")) {
          bool next_nominal = i + 1 >= a.size() || IsPunctToken(a[i + 1].token) ||
                              a[i + 1].entry.primary() == Pos::kNoun;
          if (next_nominal) t.pos = Pos::kNoun;
        }
      }
      continue;
    }
    auto p = PrevContent(a, i);
    const Token* prev = p ? &a[*p].token : nullptr;
    const Token* prev2 = (p && *p > 0) ? &a[*p - 1].token : nullptr;
    Pos chosen = e.primary();
    if (prev == nullptr || AtClauseStart(a, i)) {
      chosen = Pos::kVerb;
    } else if (prev->pos == Pos::kPron && kSubjects.contains(prev->lemma)) {
      chosen = Pos::kVerb;
    } else if (kAuxiliaries.contains(prev->lemma) && prev->lemma != "be") {
      chosen = Pos::kVerb;
    } else if (prev->lemma == "be" && IsParticiple(t.surface)) {
      chosen = Pos::kVerb;
    } else if (prev->lemma == "to" && prev2 != nullptr && kCatenatives.contains(prev2->lemma)) {
      chosen = Pos::kVerb;
    } else if (prev->lemma == "and" || prev->lemma == "or" || prev->surface == ",") {
      bool next_object = i + 1 >= a.size() || a[i + 1].token.pos == Pos::kDet ||
                         a[i + 1].token.pos == Pos::kLiteral ||
                         a[i + 1].entry.primary() == Pos::kDet ||
                         a[i + 1].entry.primary() == Pos::kPron;
      chosen = (e.primary() == Pos::kVerb || next_object) ? Pos::kVerb : NonVerbReading(e);
    } else if (prev->pos == Pos::kVerb && !kAuxiliaries.contains(prev->lemma)) {
      chosen = NonVerbReading(e);
    } else if (IsNominal(prev->pos) || prev->pos == Pos::kLiteral) {
      chosen = NonVerbReading(e);
    } else if ((prev->pos == Pos::kNoun || prev->pos == Pos::kPron) && EndsWithS(t.surface)) {
      chosen = Pos::kVerb;
    } else if (chosen == Pos::kVerb && (prev->pos == Pos::kNoun)) {
      chosen = Pos::kVerb;
    }
    // Gerunds after subordinators keep the verb reading: "after tapping".
    t.pos = chosen;
  }
}

constexpr std::array<std::string_view, 3> kLongVerbs = {"tap", "press", "click"};

void MergeLongVerbs(std::string_view text, std::vector<Analyzed>& a) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i].token.lemma != "long") continue;
    const std::string& next = a[i + 1].entry.lemma;
    if (std::find(kLongVerbs.begin(), kLongVerbs.end(), next) == kLongVerbs.end()) continue;
    Analyzed merged = a[i + 1];
    merged.token.span = {a[i].token.span.begin, a[i + 1].token.span.end};
    merged.token.surface = std::string(
        text.substr(merged.token.span.begin, merged.token.span.end - merged.token.span.begin));
    merged.entry = LexEntry{"long-" + next, {Pos::kVerb}};
    merged.token.lemma = merged.entry.lemma;
    a[i] = std::move(merged);
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
}

std::string Trimmed(std::string_view s, std::size_t* offset) {
  std::size_t b = 0;
  while (b < s.size() && IsSpace(s[b])) ++b;
  std::size_t e = s.size();
  while (e > b && IsSpace(s[e - 1])) --e;
  if (offset != nullptr) *offset = b;
  return std::string(s.substr(b, e - b));
}

// Length of a list marker ("1. ", "2) ", "- ", "* ", "+ ", "# ") at the
// start of `line` including trailing whitespace, or 0.
std::size_t ListMarkerLength(std::string_view line) {
  std::size_t i = 0;
  if (i < line.size() && IsDigit(line[i])) {
    while (i < line.size() && IsDigit(line[i])) ++i;
    if (i < line.size() && (line[i] == '.' || line[i] == ')')) {
      ++i;
    } else {
      return 0;
    }
  } else if (line.starts_with("\xE2\x80\xA2")) {  // bullet
    i = 3;
  } else if (!line.empty() && (line[0] == '-' || line[0] == '*' || line[0] == '+')) {
    i = 1;
  } else {
    return 0;
  }
  if (i < line.size() && !IsSpace(line[i])) return 0;
  while (i < line.size() && IsSpace(line[i])) ++i;
  return i == line.size() ? 0 : i;
}

std::size_t HeadingMarkerLength(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && line[i] == '#') ++i;
  if (i == 0 || i >= line.size() || !IsSpace(line[i])) return 0;
  while (i < line.size() && IsSpace(line[i])) ++i;
  return i;
}

bool IsTerminal(char c) { return c == '.' || c == '!' || c == '?'; }

// Splits one line segment into sentence ranges (relative to `line`).
std::vector<Span> SplitSentences(std::string_view line) {
  std::vector<Span> out;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    if (auto end = QuotedSpanEnd(line, i)) {
      i = *end;
      continue;
    }
    if (!IsTerminal(line[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && IsTerminal(line[j])) ++j;
    while (j < line.size() && (line[j] == ')' || line[j] == '"' || line[j] == '\'')) ++j;
    bool split = false;
    if (j >= line.size()) {
      split = true;
    } else if (IsSpace(line[j])) {
      std::size_t k = j;
      while (k < line.size() && IsSpace(line[k])) ++k;
      if (k < line.size()) {
        char c = line[k];
        split = IsUpper(c) || IsDigit(c) || c == '"' || c == '\'' || c == '(' ||
                OpeningQuote(line, k).has_value();
      }
    }
    if (split) {
      out.push_back({start, j});
      start = j;
    }
    i = j;
  }
  if (start < line.size()) out.push_back({start, line.size()});
  return out;
}

struct Line {
  std::size_t begin;
  std::string_view text;
};

std::vector<Line> SplitLines(std::string_view raw) {
  std::vector<Line> lines;
  std::size_t b = 0;
  while (b <= raw.size()) {
    std::size_t e = raw.find('\n', b);
    if (e == std::string_view::npos) e = raw.size();
    std::string_view text = raw.substr(b, e - b);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    lines.push_back({b, text});
    if (e == raw.size()) break;
    b = e + 1;
  }
  return lines;
}

bool IsBlank(std::string_view s) { return std::all_of(s.begin(), s.end(), IsSpace); }

}  // namespace

std::string_view PosName(Pos pos) {
  switch (pos) {
    case Pos::kVerb: return "VERB";
    case Pos::kNoun: return "NOUN";
    case Pos::kPron: return "PRON";
    case Pos::kAdp: return "ADP";
    case Pos::kAdv: return "ADV";
    case Pos::kDet: return "DET";
    case Pos::kAdj: return "ADJ";
    case Pos::kNum: return "NUM";
    case Pos::kLiteral: return "LITERAL";
    case Pos::kOther: return "OTHER";
  }
  return "OTHER";
}

std::string_view SentenceKindName(SentenceKind kind) {
  switch (kind) {
    case SentenceKind::kImperative: return "Imperative";
    case SentenceKind::kConditional: return "Conditional";
    case SentenceKind::kDeclarative: return "Declarative";
    case SentenceKind::kPassive: return "Passive";
    case SentenceKind::kOther: return "Other";
  }
  return "Other";
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool Token::is_punct() const { return IsPunctToken(*this); }

std::string Token::literal_value() const {
  if (pos != Pos::kLiteral) return surface;
  if (auto mark = OpeningQuote(surface, 0)) {
    for (std::string_view closer : mark->closers) {
      if (surface.size() >= mark->width + closer.size() &&
          std::string_view(surface).ends_with(closer)) {
        return surface.substr(mark->width, surface.size() - mark->width - closer.size());
      }
    }
  }
  return surface;
}

std::vector<Token> Tokenize(std::string_view text) {
  const Lexicon& lexicon = Lexicon::Active();
  std::vector<Analyzed> analyzed;
  std::size_t i = 0;
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      ++i;
      continue;
    }
    Token t;
    LexEntry entry;
    std::size_t end = i;
    if (auto q = QuotedSpanEnd(text, i)) {
      end = *q;
      t.pos = Pos::kLiteral;
    } else if (IsDigit(text[i]) && (NumeralEnd(text, i) == text.size() ||
                                    !IsWordByte(text[NumeralEnd(text, i)]))) {
      end = NumeralEnd(text, i);
      t.pos = Pos::kLiteral;
    } else if (IsWordByte(text[i]) && !StartsTypographicQuote(text, i)) {
      end = WordEnd(text, i);
    } else {
      end = i + (StartsTypographicQuote(text, i) ? 3 : 1);
    }
    t.surface = std::string(text.substr(i, end - i));
    t.span = {i, end};
    if (t.pos == Pos::kLiteral) {
      t.lemma = ToLower(t.literal_value());
      entry = LexEntry{t.lemma, {Pos::kLiteral}};
    } else if (IsWordByte(t.surface[0]) && !StartsTypographicQuote(t.surface, 0)) {
      entry = lexicon.Analyze(t.surface);
      t.lemma = entry.lemma;
      t.pos = entry.primary();
    } else {
      t.lemma = t.surface;
      t.pos = Pos::kOther;
      entry = LexEntry{t.lemma, {Pos::kOther}};
    }
    analyzed.push_back({std::move(t), std::move(entry)});
    i = end;
  }
  MergeLongVerbs(text, analyzed);
  Disambiguate(analyzed);
  std::vector<Token> out;
  out.reserve(analyzed.size());
  for (auto& a : analyzed) out.push_back(std::move(a.token));
  return out;
}

std::size_t BugReport::sentence_count() const {
  std::size_t n = 0;
  for (const auto& p : paragraphs) n += p.sentences.size();
  return n;
}

std::vector<const Sentence*> BugReport::sentences() const {
  std::vector<const Sentence*> out;
  for (const auto& p : paragraphs) {
    for (const auto& s : p.sentences) out.push_back(&s);
  }
  return out;
}

BugReport ParseReport(std::string_view raw) {
  if (IsBlank(raw)) throw EmptyReportError();
  BugReport report;
  report.body = std::string(raw);
  report.id = ShortHash(raw);
  std::vector<Line> lines = SplitLines(raw);

  std::size_t first = 0;
  while (first < lines.size() && IsBlank(lines[first].text)) ++first;
  if (first < lines.size()) {
    std::size_t off = 0;
    std::string head = Trimmed(lines[first].text, &off);
    if (ToLower(head).starts_with("title:")) {
      report.title = Trimmed(std::string_view(head).substr(6), nullptr);
      ++first;
    }
  }

  Paragraph current;
  auto close = [&]() {
    if (!current.sentences.empty()) report.paragraphs.push_back(std::move(current));
    current = Paragraph{};
  };
  auto add_segment = [&](std::size_t base, std::string_view segment) {
    for (const Span& s : SplitSentences(segment)) {
      std::size_t lead = 0;
      std::string text = Trimmed(segment.substr(s.begin, s.end - s.begin), &lead);
      if (text.empty()) continue;
      Sentence sentence;
      sentence.span = {base + s.begin + lead, base + s.begin + lead + text.size()};
      sentence.tokens = Tokenize(text);
      sentence.raw = std::move(text);
      if (current.sentences.empty()) current.span.begin = sentence.span.begin;
      current.span.end = sentence.span.end;
      current.sentences.push_back(std::move(sentence));
    }
  };

  for (std::size_t li = first; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (IsBlank(line.text)) {
      close();
      continue;
    }
    std::size_t indent = 0;
    while (indent < line.text.size() && IsSpace(line.text[indent])) ++indent;
    std::string_view body = line.text.substr(indent);
    std::size_t marker = ListMarkerLength(body);
    std::size_t heading = marker == 0 ? HeadingMarkerLength(body) : 0;
    if (marker > 0 || heading > 0) {
      close();
      std::size_t skip = marker > 0 ? marker : heading;
      current.span.begin = line.begin;
      add_segment(line.begin + indent + skip, body.substr(skip));
      close();
      continue;
    }
    add_segment(line.begin + indent, body);
  }
  close();
  return report;
}

std::string RenderReportText(const BugReport& report) {
  std::string out = "Title: " + report.title + "\n";
  for (const auto& p : report.paragraphs) {
    out += "\n";
    for (const auto& s : p.sentences) out += s.raw + "\n";
  }
  return out;
}

std::string ReconstructSentence(const Sentence& sentence) {
  std::string out;
  std::size_t cursor = 0;
  for (const Token& t : sentence.tokens) {
    out += sentence.raw.substr(cursor, t.span.begin - cursor);
    out += t.surface;
    cursor = t.span.end;
  }
  out += sentence.raw.substr(std::min(cursor, sentence.raw.size()));
  return out;
}

std::vector<std::string> Terms(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) {
    if (t.is_punct()) continue;
    if (t.is_literal()) {
      for (auto& term : Terms(t.literal_value())) out.push_back(std::move(term));
    } else {
      out.push_back(t.lemma);
    }
  }
  return out;
}

std::vector<std::string> Terms(std::string_view text) {
  std::string spaced;
  spaced.reserve(text.size() + 8);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool numeric_dot = c == '.' && i > 0 && i + 1 < text.size() && IsDigit(text[i - 1]) &&
                       IsDigit(text[i + 1]);
    if (c == '_' || c == '/' || (c == '.' && !numeric_dot)) {
      spaced.push_back(' ');
      continue;
    }
    // camelCase boundary
    if (i > 0 && IsUpper(c) && std::islower(static_cast<unsigned char>(text[i - 1]))) {
      spaced.push_back(' ');
    }
    spaced.push_back(c);
  }
  std::vector<std::string> out;
  for (const Token& t : Tokenize(spaced)) {
    if (t.is_punct()) continue;
    if (t.is_literal()) {
      std::string inner = t.literal_value();
      if (inner == t.surface) {
        out.push_back(t.lemma);
      } else {
        for (auto& term : Terms(inner)) out.push_back(std::move(term));
      }
    } else {
      out.push_back(t.lemma);
    }
  }
  return out;
}

}  // namespace reprolint
