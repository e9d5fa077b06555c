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
#include <random>

#include "gtest/gtest.h"
#include "reprolint/error.h"

namespace reprolint {
namespace {

Sentence MakeSentence(std::string text) {
  Sentence s;
  s.tokens = Tokenize(text);
  s.raw = std::move(text);
  return s;
}

std::string Tuple(const S2R& s) { return s.ToString(); }

TEST(LabelTest, ImperativeIsBegin) {
  Paragraph p{{MakeSentence("Tap the save button.")}, {}};
  PatternLabeler labeler;
  EXPECT_EQ(labeler.Label(p), std::vector<SentenceLabel>{SentenceLabel::kBegin});
}

TEST(LabelTest, ConditionalClauseIsAStep) {
  Paragraph p{{MakeSentence(
                  "When I create an entry for a purchase, the autocomplete list shows up")},
              {}};
  PatternLabeler labeler;
  EXPECT_EQ(labeler.Label(p), std::vector<SentenceLabel>{SentenceLabel::kBegin});
}

TEST(LabelTest, ExpectedBehaviorIsOutside) {
  PatternLabeler labeler;
  for (const char* text : {"The app should keep the list sorted.",
                           "I expected the total to be updated.",
                           "The list shows the old value.", "It crashes.",
                           "I see a blank screen."}) {
    Paragraph p{{MakeSentence(text)}, {}};
    EXPECT_EQ(labeler.Label(p), std::vector<SentenceLabel>{SentenceLabel::kOutside}) << text;
  }
}

TEST(LabelTest, ContinuationMarkerYieldsInside) {
  Paragraph p{{MakeSentence("Open the app."), MakeSentence("Then tap save."),
               MakeSentence("The list is empty."), MakeSentence("Then rotate the phone.")},
              {}};
  PatternLabeler labeler;
  EXPECT_EQ(labeler.Label(p),
            (std::vector<SentenceLabel>{SentenceLabel::kBegin, SentenceLabel::kInside,
                                        SentenceLabel::kOutside, SentenceLabel::kBegin}));
}

TEST(LabelTest, RepairPromotesDanglingInside) {
  std::mt19937 rng(3);
  for (int round = 0; round < 500; ++round) {
    std::vector<SentenceLabel> labels(rng() % 8);
    for (auto& l : labels) l = static_cast<SentenceLabel>(rng() % 3);
    RepairLabels(labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == SentenceLabel::kInside) {
        ASSERT_GT(i, 0u);
        EXPECT_NE(labels[i - 1], SentenceLabel::kOutside);
      }
    }
  }
}

TEST(SidecarLabelerTest, ReadsLinesAndChecksCounts) {
  BugReport r = ParseReport("Open the app. Tap save.\n\nIt crashes.");
  SidecarLabeler labeler = SidecarLabeler::FromText("# labels\nB\nI\n\nO\n");
  auto labels = LabelSentences(r, labeler);
  EXPECT_EQ(labels, (std::vector<SentenceLabel>{SentenceLabel::kBegin, SentenceLabel::kInside,
                                                SentenceLabel::kOutside}));
  labeler.CheckExhausted();

  SidecarLabeler short_file = SidecarLabeler::FromText("B\n");
  EXPECT_THROW(LabelSentences(r, short_file), LabelFileError);
  EXPECT_THROW(SidecarLabeler::FromText("X\n"), LabelFileError);
  SidecarLabeler long_file = SidecarLabeler::FromText("B\nB\nB\nB\n");
  LabelSentences(r, long_file);
  EXPECT_THROW(long_file.CheckExhausted(), LabelFileError);
}

TEST(ExtractTest, WorkedConditionalSentence) {
  auto r = ExtractS2Rs(
      MakeSentence("When I create an entry for a purchase, the autocomplete list shows up"));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.kind, SentenceKind::kConditional);
  EXPECT_EQ(Tuple(r.steps[0]), "[create] [entry] [for] [purchase]");
}

TEST(ExtractTest, LiteralObjectWithPreposition) {
  auto r = ExtractS2Rs(MakeSentence("Enter '10' on price"));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.kind, SentenceKind::kImperative);
  EXPECT_EQ(Tuple(r.steps[0]), "[enter] ['10'] [on] [price]");
  EXPECT_TRUE(r.steps[0].object[0].is_literal());
}

TEST(ExtractTest, LoneVerb) {
  auto r = ExtractS2Rs(MakeSentence("Save."));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(Tuple(r.steps[0]), "[save] [] [] []");
}

TEST(ExtractTest, VerbOnlyWordAfterDeterminerIsNominal) {
  auto r = ExtractS2Rs(MakeSentence("Tap the cancel button"));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(Tuple(r.steps[0]), "[tap] [cancel button] [] []");
  r = ExtractS2Rs(MakeSentence("Press the finish button"));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(Tuple(r.steps[0]), "[press] [finish button] [] []");
}

TEST(ExtractTest, SentenceKinds) {
  auto r = ExtractS2Rs(MakeSentence("I tapped the save button."));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.kind, SentenceKind::kDeclarative);
  EXPECT_EQ(Tuple(r.steps[0]), "[tap] [save button] [] []");

  r = ExtractS2Rs(MakeSentence("The entry is deleted."));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.kind, SentenceKind::kPassive);
  EXPECT_EQ(Tuple(r.steps[0]), "[delete] [entry] [] []");

  r = ExtractS2Rs(MakeSentence("Set price to 10"));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(Tuple(r.steps[0]), "[set] [price] [to] [10]");

  r = ExtractS2Rs(MakeSentence("You can try to rotate the phone to landscape."));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(Tuple(r.steps[0]), "[rotate] [phone] [to] [landscape]");
}

TEST(ExtractTest, ConjoinedVerbsYieldSeveralSteps) {
  auto r = ExtractS2Rs(MakeSentence("Tap new purchase and type 'Lunch' in the description"));
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(Tuple(r.steps[0]), "[tap] [new purchase] [] []");
  EXPECT_EQ(Tuple(r.steps[1]), "[type] ['Lunch'] [in] [description]");
}

TEST(ExtractTest, NoVerbIsReported) {
  auto r = ExtractS2Rs(MakeSentence("The blue screen."));
  EXPECT_TRUE(r.steps.empty());
  ASSERT_TRUE(r.failure.has_value());
  EXPECT_EQ(*r.failure, "no verb found");
}

TEST(ExtractTest, ActionIsAlwaysAVerbLemmaOfTheSentence) {
  const char* corpus[] = {
      "Open the app", "Tap more options, then tap settings, then tap theme color.",
      "When I rotate the phone, tap save", "I tap save after I type '5' in the price",
      "After tapping the row, long press the entry", "Go back to the main screen",
      "Select the date and enter 'x' into the field", "Then swipe up",
  };
  for (const char* text : corpus) {
    Sentence s = MakeSentence(text);
    auto r = ExtractS2Rs(s);
    EXPECT_FALSE(r.steps.empty()) << text;
    for (const S2R& step : r.steps) {
      EXPECT_FALSE(step.action.empty());
      bool found = std::any_of(s.tokens.begin(), s.tokens.end(), [&](const Token& t) {
        return t.pos == Pos::kVerb && t.lemma == step.action;
      });
      EXPECT_TRUE(found) << text << " -> " << step.ToString();
    }
    EXPECT_EQ(ExtractS2Rs(s).steps, r.steps);
  }
}

TEST(OrderTest, TextualOrderByDefault) {
  BugReport report = ParseReport("Open app.\nTap save.");
  PatternLabeler labeler;
  auto out = ExtractReportSteps(report, labeler);
  ASSERT_EQ(out.steps.size(), 2u);
  EXPECT_EQ(out.steps[0].action, "open");
  EXPECT_EQ(out.steps[1].action, "tap");
  EXPECT_EQ(out.steps[0].order_index, 0u);
  EXPECT_EQ(out.steps[1].order_index, 1u);
}

TEST(OrderTest, AfterClauseMovesFirst) {
  auto r = ExtractS2Rs(MakeSentence("I see the crash after I rotate the phone"));
  auto ordered = OrderS2Rs(r.steps);
  ASSERT_FALSE(ordered.empty());
  EXPECT_EQ(Tuple(ordered[0]), "[rotate] [phone] [] []");

  r = ExtractS2Rs(MakeSentence("I tap save after I type '5' in the price"));
  ordered = OrderS2Rs(r.steps);
  ASSERT_EQ(ordered.size(), 2u);
  EXPECT_EQ(ordered[0].action, "type");
  EXPECT_EQ(ordered[1].action, "tap");
}

TEST(OrderTest, ThenChainKeepsTextualOrder) {
  auto r = ExtractS2Rs(MakeSentence("Tap more options, then tap about, then tap close."));
  auto ordered = OrderS2Rs(r.steps);
  ASSERT_EQ(ordered.size(), 3u);
  EXPECT_EQ(Tuple(ordered[0]), "[tap] [more options] [] []");
  EXPECT_EQ(Tuple(ordered[1]), "[tap] [about] [] []");
  EXPECT_EQ(Tuple(ordered[2]), "[tap] [close] [] []");
}

TEST(OrderTest, IsAPermutationWithContiguousIndices) {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    std::vector<S2R> steps(rng() % 10);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      steps[i].action = "a" + std::to_string(i);
      steps[i].sentence_index = rng() % 4;
      steps[i].clause_index = rng() % 3;
      if (rng() % 4 == 0 && steps[i].clause_index > 0) steps[i].precedes_clause = 0;
    }
    auto ordered = OrderS2Rs(steps);
    ASSERT_EQ(ordered.size(), steps.size());
    for (std::size_t i = 0; i < ordered.size(); ++i) EXPECT_EQ(ordered[i].order_index, i);
    auto names = [](const std::vector<S2R>& v) {
      std::vector<std::string> n;
      for (const auto& s : v) n.push_back(s.action);
      std::sort(n.begin(), n.end());
      return n;
    };
    EXPECT_EQ(names(ordered), names(steps));
  }
}

}  // namespace
}  // namespace reprolint
