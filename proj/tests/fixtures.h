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

// Fixture paths and report checks shared by the unit and acceptance tests.

#ifndef REPROLINT_TESTS_FIXTURES_H_
#define REPROLINT_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "reprolint/device.h"
#include "reprolint/error.h"
#include "reprolint/quality.h"
#include "reprolint/store.h"

namespace reprolint::fixture {

inline const std::string kDataDir = REPROLINT_DATA_DIR;
inline const std::string kAppPath = kDataDir + "/fixtures/expensedroid.app.json";

inline std::string ReportPath(const std::string& name) {
  return kDataDir + "/fixtures/reports/" + name + ".txt";
}

inline std::string GoldenPath(const std::string& name) {
  return kDataDir + "/fixtures/golden/" + name;
}

inline std::string ReportText(const std::string& name) { return ReadFile(ReportPath(name)); }

// "MS+HQ", "AS", ... per step.
inline std::vector<std::string> KindsOf(const QualityReport& qr) {
  std::vector<std::string> out;
  for (const StepAssessment& s : qr.steps) {
    std::string kinds;
    for (const Annotation& a : s.annotations) {
      if (!kinds.empty()) kinds += "+";
      kinds += AnnotationName(a.kind);
    }
    out.push_back(kinds);
  }
  return out;
}

// Replays the app launch and every MS and HQ interaction of `qr`, in report
// order, on a fresh session. Each interaction must start on its recorded
// source screen, execute without an illegal-event error and land on its
// recorded target. Returns an empty string on success, else the reason.
inline std::string ReplayReport(const AppModel& model, const QualityReport& qr) {
  DeviceSession session(model);
  session.Execute({EventKind::kOpenApp, std::nullopt});
  for (std::size_t i = 0; i < qr.steps.size(); ++i) {
    for (const Annotation& a : qr.steps[i].annotations) {
      if (a.kind != AnnotationKind::kMS && a.kind != AnnotationKind::kHQ) continue;
      for (const InteractionView& v : a.interactions) {
        if (v.event.kind == EventKind::kOpenApp && v.source_screen == kLauncherScreen) continue;
        const std::string where = "step " + std::to_string(i) + " " + v.description;
        if (session.current().name != v.source_screen) {
          return where + ": device is on " + session.current().name + ", expected " +
                 v.source_screen;
        }
        try {
          session.Execute(v.event, v.component_id);
        } catch (const IllegalEventError& e) {
          return where + ": " + e.what();
        }
        if (session.current().name != v.target_screen) {
          return where + ": reached " + session.current().name + ", expected " + v.target_screen;
        }
      }
    }
  }
  return "";
}

// Fixture reports with their expected annotation kinds per step.
struct Expectation {
  std::string report;
  std::vector<std::string> kinds;
};

inline const std::vector<Expectation>& Expectations() {
  static const std::vector<Expectation> kAll = {
      {"01_complete", {"HQ", "HQ", "HQ", "HQ", "HQ", "HQ"}},
      {"02_missing_steps", {"HQ", "HQ", "MS+HQ", "HQ"}},
      {"03_ambiguous", {"HQ", "HQ", "HQ", "AS"}},
      {"04_vocabulary", {"HQ", "VM"}},
      {"05_conditional", {"HQ"}},
      {"06_type_on_field", {"HQ", "HQ", "HQ", "HQ"}},
      {"07_set_field", {"HQ", "HQ", "HQ", "HQ"}},
      {"08_focused_literal", {"HQ", "HQ", "HQ", "HQ"}},
      {"09_after_clause", {"HQ", "HQ", "HQ", "HQ"}},
      {"10_then_chain", {"HQ", "HQ", "HQ", "HQ"}},
      {"11_missing_selection", {"HQ", "MS+HQ", "HQ"}},
      {"12_no_steps", {}},
  };
  return kAll;
}

}  // namespace reprolint::fixture

#endif  // REPROLINT_TESTS_FIXTURES_H_
