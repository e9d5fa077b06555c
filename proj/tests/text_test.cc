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

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "reprolint/error.h"
#include "reprolint/lexicon.h"

namespace reprolint {
namespace {

std::vector<std::string> Surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

TEST(ParseReportTest, ListItemsBecomeParagraphs) {
  BugReport r = ParseReport("1. Open app\n2. Tap save");
  ASSERT_EQ(r.paragraphs.size(), 2u);
  EXPECT_EQ(r.paragraphs[0].sentences.size(), 1u);
  EXPECT_EQ(r.paragraphs[1].sentences.size(), 1u);
  EXPECT_EQ(r.paragraphs[0].sentences[0].raw, "Open app");
  EXPECT_EQ(r.paragraphs[1].sentences[0].raw, "Tap save");
}

TEST(ParseReportTest, ConditionalSentenceStaysWhole) {
  BugReport r =
      ParseReport("When I create an entry for a purchase, the autocomplete list shows up");
  ASSERT_EQ(r.paragraphs.size(), 1u);
  ASSERT_EQ(r.paragraphs[0].sentences.size(), 1u);
}

TEST(ParseReportTest, EmptyInputIsAnError) {
  EXPECT_THROW(ParseReport(""), EmptyReportError);
  EXPECT_THROW(ParseReport("  \n\n \t"), EmptyReportError);
}

TEST(ParseReportTest, BlankLinesSplitParagraphsAndPunctuationSplitsSentences) {
  BugReport r = ParseReport(
      "Title: Crash on save\n\nOpen the app. Tap 'Save. Now' please! Is it fixed?\n"
      "Second line here\n\nLast paragraph. e.g. lowercase continues");
  EXPECT_EQ(r.title, "Crash on save");
  ASSERT_EQ(r.paragraphs.size(), 2u);
  const auto& p0 = r.paragraphs[0].sentences;
  ASSERT_EQ(p0.size(), 4u);
  EXPECT_EQ(p0[0].raw, "Open the app.");
  EXPECT_EQ(p0[1].raw, "Tap 'Save. Now' please!");
  EXPECT_EQ(p0[2].raw, "Is it fixed?");
  EXPECT_EQ(p0[3].raw, "Second line here");
  ASSERT_EQ(r.paragraphs[1].sentences.size(), 1u);
  EXPECT_EQ(r.paragraphs[1].sentences[0].raw, "Last paragraph. e.g. lowercase continues");
}

TEST(ParseReportTest, SpansPointIntoBody) {
  std::string raw = "Intro text.\n\n- Tap save\n* Rotate the phone\n";
  BugReport r = ParseReport(raw);
  for (const Sentence* s : r.sentences()) {
    EXPECT_EQ(raw.substr(s->span.begin, s->span.end - s->span.begin), s->raw);
  }
  for (std::size_t i = 1; i < r.paragraphs.size(); ++i) {
    EXPECT_LE(r.paragraphs[i - 1].span.end, r.paragraphs[i].span.begin);
  }
}

TEST(ParseReportTest, IdempotentOnRenderedOutput) {
  const char* inputs[] = {
      "1. Open app\n2. Tap save",
      "Title: x\n\nOpen the app. Tap save. The list should be sorted.\n\n- Go back\n",
      "## Steps\nTap 'Done.' Then rotate.\n3) Enter '10' on price. Save it!",
  };
  for (const char* in : inputs) {
    BugReport once = ParseReport(in);
    BugReport twice = ParseReport(RenderReportText(once));
    EXPECT_EQ(once.title, twice.title);
    ASSERT_EQ(once.paragraphs.size(), twice.paragraphs.size()) << in;
    for (std::size_t p = 0; p < once.paragraphs.size(); ++p) {
      ASSERT_EQ(once.paragraphs[p].sentences.size(), twice.paragraphs[p].sentences.size());
      for (std::size_t s = 0; s < once.paragraphs[p].sentences.size(); ++s) {
        EXPECT_EQ(once.paragraphs[p].sentences[s].raw, twice.paragraphs[p].sentences[s].raw);
        EXPECT_EQ(once.paragraphs[p].sentences[s].tokens,
                  twice.paragraphs[p].sentences[s].tokens);
      }
    }
  }
}

TEST(TokenizeTest, PluralNounLemma) {
  auto t = Tokenize("entries");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].lemma, "entry");
  EXPECT_EQ(t[0].pos, Pos::kNoun);
}

TEST(TokenizeTest, QuotedLiteralIsOneToken) {
  auto t = Tokenize("enter '10' on price");
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(Surfaces(t), (std::vector<std::string>{"enter", "'10'", "on", "price"}));
  EXPECT_EQ(t[0].pos, Pos::kVerb);
  EXPECT_EQ(t[1].pos, Pos::kLiteral);
  EXPECT_EQ(t[1].literal_value(), "10");
  EXPECT_EQ(t[2].pos, Pos::kAdp);
  EXPECT_EQ(t[3].pos, Pos::kNoun);
}

TEST(TokenizeTest, PastTenseUndoublesAgainstLexicon) {
  auto t = Tokenize("Tapped");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].lemma, "tap");
  EXPECT_EQ(t[0].pos, Pos::kVerb);
}

TEST(TokenizeTest, NumeralsAndTypographicQuotes) {
  auto t = Tokenize("Set price to 10.50 and type \xE2\x80\x9CHello world\xE2\x80\x9D");
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(t[3].surface, "10.50");
  EXPECT_EQ(t[3].pos, Pos::kLiteral);
  EXPECT_EQ(t[6].pos, Pos::kLiteral);
  EXPECT_EQ(t[6].literal_value(), "Hello world");
  EXPECT_EQ(t[5].pos, Pos::kVerb);
}

TEST(TokenizeTest, ApostropheInsideWordIsNotAQuote) {
  auto t = Tokenize("I don't see the 'Save' button");
  EXPECT_EQ(Surfaces(t),
            (std::vector<std::string>{"I", "don't", "see", "the", "'Save'", "button"}));
  EXPECT_EQ(t[4].pos, Pos::kLiteral);
}

TEST(TokenizeTest, PositionalRules) {
  auto t = Tokenize("Tap the save button");
  EXPECT_EQ(t[0].pos, Pos::kVerb);
  EXPECT_EQ(t[2].pos, Pos::kNoun);
  t = Tokenize("Then type the price");
  EXPECT_EQ(t[1].pos, Pos::kVerb);
  t = Tokenize("The list shows up");
  EXPECT_EQ(t[2].pos, Pos::kVerb);
  t = Tokenize("Tap delete entry");
  EXPECT_EQ(t[1].pos, Pos::kNoun);
  t = Tokenize("The entry is deleted");
  EXPECT_EQ(t[3].pos, Pos::kVerb);
  EXPECT_EQ(t[3].lemma, "delete");
  t = Tokenize("Long press the row");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].lemma, "long-press");
  EXPECT_EQ(t[0].pos, Pos::kVerb);
}

TEST(TokenizeTest, LemmasAreLowercaseAndCoverText) {
  std::mt19937 rng(7);
  const std::vector<std::string> pieces = {"Tap", "the", "'Save'", "button,", "then",
                                           "ENTER", "10", "on", "Price.", "settings",
                                           "\xE2\x80\x98ok\xE2\x80\x99", "(x)", "don't"};
  for (int round = 0; round < 300; ++round) {
    std::string text;
    int n = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < n; ++i) {
      if (!text.empty()) text += (rng() % 3 == 0) ? "  " : " ";
      text += pieces[rng() % pieces.size()];
    }
    Sentence s{text, Tokenize(text), SentenceKind::kOther, {}};
    EXPECT_EQ(ReconstructSentence(s), text);
    EXPECT_EQ(Tokenize(text), s.tokens);  // deterministic
    for (const Token& tok : s.tokens) {
      EXPECT_EQ(tok.lemma, ToLower(tok.lemma));
      EXPECT_EQ(text.substr(tok.span.begin, tok.span.end - tok.span.begin), tok.surface);
    }
  }
}

TEST(TermsTest, IdentifiersSplitIntoLemmas) {
  EXPECT_EQ(Terms("btn_save"), (std::vector<std::string>{"btn", "save"}));
  EXPECT_EQ(Terms("menuSettings"), (std::vector<std::string>{"menu", "setting"}));
  EXPECT_EQ(Terms("Back up to SD card"),
            (std::vector<std::string>{"back", "up", "to", "sd", "card"}));
  EXPECT_EQ(Terms("Lunch 10.00"), (std::vector<std::string>{"lunch", "10.00"}));
}

TEST(LexiconTest, SuffixStrippingRespectsTags) {
  const Lexicon& lex = Lexicon::Default();
  EXPECT_GT(lex.size(), 1000u);
  EXPECT_EQ(lex.Analyze("used").lemma, "use");
  EXPECT_EQ(lex.Analyze("typing").lemma, "type");
  EXPECT_EQ(lex.Analyze("settings").lemma, "setting");
  EXPECT_EQ(lex.Analyze("boxes").lemma, "box");
  EXPECT_EQ(lex.Analyze("tried").lemma, "try");
  EXPECT_EQ(lex.Analyze("scrolled").lemma, "scroll");
  EXPECT_EQ(lex.Analyze("went").lemma, "go");
  EXPECT_EQ(lex.Analyze("frobnicated").lemma, "frobnicat");
}

}  // namespace
}  // namespace reprolint
