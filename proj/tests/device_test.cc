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

#include "reprolint/device.h"

#include <random>

#include "gtest/gtest.h"
#include "reprolint/error.h"
#include "reprolint/graph.h"

namespace reprolint {
namespace {

class DeviceTest : public ::testing::Test {
 protected:
  DeviceTest() : model_(AppModel::Load(REPROLINT_DATA_DIR "/fixtures/expensedroid.app.json")) {}

  void Go(DeviceSession& s, EventKind kind, const std::string& id = "",
          std::optional<std::string> input = std::nullopt) {
    s.Execute({kind, std::move(input)}, id);
    // Replay invariant.
    EXPECT_EQ(Replay(model_, s.history()).current(), s.current());
  }

  AppModel model_;
};

TEST_F(DeviceTest, LaunchReachesInitialScreen) {
  DeviceSession s(model_);
  EXPECT_EQ(s.current().name, kLauncherScreen);
  EXPECT_THROW(s.Execute({EventKind::kTap, std::nullopt}, "btn_create"), IllegalEventError);
  Go(s, EventKind::kOpenApp);
  EXPECT_EQ(s.current().name, "Main");
}

TEST_F(DeviceTest, TapSaveReturnsToMain) {
  DeviceSession s(model_);
  Go(s, EventKind::kOpenApp);
  Go(s, EventKind::kTap, "btn_create");
  ASSERT_EQ(s.current().name, "CreateEntry");
  Go(s, EventKind::kTap, "btn_save");
  EXPECT_EQ(s.current().name, "Main");
}

TEST_F(DeviceTest, UnmappedEventIsNoOp) {
  DeviceSession s(model_);
  Go(s, EventKind::kOpenApp);
  std::string before = Signature(s.current());
  Go(s, EventKind::kTap, "tv_title");
  EXPECT_EQ(s.current().name, "Main");
  EXPECT_EQ(Signature(s.current()), before);
  Go(s, EventKind::kSwipeUp);
  EXPECT_EQ(Signature(s.current()), before);
}

TEST_F(DeviceTest, IllegalEvents) {
  DeviceSession s(model_);
  Go(s, EventKind::kOpenApp);
  Go(s, EventKind::kTap, "btn_create");
  EXPECT_THROW(s.Execute({EventKind::kType, "x"}, "btn_save"), IllegalEventError);
  EXPECT_THROW(s.Execute({EventKind::kTap, std::nullopt}, "btn_missing"), IllegalEventError);
  EXPECT_THROW(s.Execute({EventKind::kTap, std::nullopt}, ""), IllegalEventError);
  EXPECT_THROW(s.Execute({EventKind::kTap, "x"}, "btn_save"), IllegalEventError);
  EXPECT_EQ(s.current().name, "CreateEntry");
}

TEST_F(DeviceTest, ClickOnChildBubblesToClickableParent) {
  DeviceSession s(model_);
  Go(s, EventKind::kOpenApp);
  Go(s, EventKind::kTap, "tv_lunch");
  EXPECT_EQ(s.current().name, "EntryDetail");
}

TEST_F(DeviceTest, BackFollowsHistory) {
  DeviceSession s(model_);
  Go(s, EventKind::kOpenApp);
  Go(s, EventKind::kTap, "btn_menu");
  Go(s, EventKind::kTap, "menu_settings");
  Go(s, EventKind::kTapBack);
  EXPECT_EQ(s.current().name, "OptionsMenu");
  Go(s, EventKind::kTapBack);
  EXPECT_EQ(s.current().name, "Main");
  Go(s, EventKind::kTapBack);
  EXPECT_EQ(s.current().name, "Main");
}

TEST_F(DeviceTest, CheckpointRestore) {
  DeviceSession s(model_);
  Go(s, EventKind::kOpenApp);
  Checkpoint at_main = s.Capture();
  s.Restore(at_main);
  EXPECT_EQ(s.state(), at_main.state());

  Go(s, EventKind::kTap, "btn_menu");
  Go(s, EventKind::kTap, "menu_settings");
  Go(s, EventKind::kTap, "chk_show_date");
  EXPECT_TRUE(s.current().state_tags.contains("chk_show_date=checked"));
  Go(s, EventKind::kTap, "btn_color");
  Go(s, EventKind::kTap, "btn_blue");
  s.Restore(at_main);
  EXPECT_EQ(s.current().name, "Main");
  EXPECT_EQ(s.history().size(), 1u);
  EXPECT_EQ(Replay(model_, s.history()).current(), s.current());
}

TEST_F(DeviceTest, RestoreAcrossTypeRestoresFields) {
  DeviceSession s(model_);
  Go(s, EventKind::kOpenApp);
  Go(s, EventKind::kTap, "btn_create");
  Checkpoint cp = s.Capture();
  Go(s, EventKind::kType, "et_price", "10");
  EXPECT_EQ(s.current().Find("et_price")->value, "10");
  EXPECT_TRUE(s.current().Find("et_price")->flags.focused);
  EXPECT_FALSE(s.current().Find("et_description")->flags.focused);
  s.Restore(cp);
  EXPECT_EQ(s.current().Find("et_price")->value, "");
  EXPECT_TRUE(s.current().Find("et_description")->flags.focused);
}

TEST_F(DeviceTest, ForeignCheckpointIsRejected) {
  DeviceSession a(model_);
  DeviceSession b(model_);
  EXPECT_THROW(b.Restore(a.Capture()), ForeignCheckpointError);
}

TEST_F(DeviceTest, RandomWalksAreDeterministicAndReplayable) {
  std::mt19937 rng(5);
  for (int round = 0; round < 20; ++round) {
    DeviceSession s(model_);
    s.Execute({EventKind::kOpenApp, std::nullopt});
    std::vector<std::string> screens;
    for (int step = 0; step < 30; ++step) {
      std::vector<const GuiComponent*> clickable;
      for (const GuiComponent* c : s.current().Components()) {
        if (c->flags.tappable) clickable.push_back(c);
      }
      if (clickable.empty() || rng() % 6 == 0) {
        s.Execute({EventKind::kTapBack, std::nullopt});
      } else {
        s.Execute({EventKind::kTap, std::nullopt}, clickable[rng() % clickable.size()]->id);
      }
      screens.push_back(s.current().name);
    }
    DeviceSession again = Replay(model_, s.history());
    EXPECT_EQ(again.current(), s.current());
    EXPECT_EQ(again.state().back_stack, s.state().back_stack);
    std::vector<std::string> replayed;
    for (std::size_t i = 1; i < again.history().size(); ++i) {
      replayed.push_back(again.history()[i].target_screen);
    }
    EXPECT_EQ(replayed, screens);
  }
}

TEST_F(DeviceTest, VisibilityTagsChangeStructure) {
  auto doc = nlohmann::json::parse(R"({
    "version": 1, "appName": "Tags", "initialScreen": "List",
    "screens": [
      {"name": "List", "components": [
        {"type": "List", "id": "items", "bounds": [0, 0, 360, 300], "children": [
          {"type": "TextView", "id": "row1", "label": "First", "bounds": [0, 0, 360, 50]},
          {"type": "TextView", "id": "row2", "label": "Second", "bounds": [0, 50, 360, 50],
           "visibleWhen": "added"}]},
        {"type": "Button", "id": "add", "label": "Add", "bounds": [0, 400, 360, 50]}]}],
    "transitions": [
      {"screen": "List", "event": "Tap", "componentId": "add", "target": "List",
       "addTags": ["added"]}]
  })");
  AppModel m = AppModel::FromJson(doc);
  DeviceSession s(m);
  s.Execute({EventKind::kOpenApp, std::nullopt});
  std::string before = Signature(s.current());
  EXPECT_EQ(s.current().Find("row2"), nullptr);
  s.Execute({EventKind::kTap, std::nullopt}, "add");
  EXPECT_NE(s.current().Find("row2"), nullptr);
  EXPECT_NE(Signature(s.current()), before);
}

}  // namespace
}  // namespace reprolint
