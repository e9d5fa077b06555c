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

#ifndef REPROLINT_REPORT_H_
#define REPROLINT_REPORT_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "reprolint/quality.h"

namespace reprolint {

inline constexpr int kReportSchemaVersion = 1;

// Machine format. Keys are sorted, so equal reports give equal bytes.
nlohmann::json ReportToJson(const QualityReport& report);
std::string RenderJson(const QualityReport& report);

// Single self-contained HTML page; wireframes open as CSS-only modals.
std::string RenderHtml(const QualityReport& report);

std::string HtmlEscape(std::string_view text);

struct AssessmentArtifacts {
  QualityReport report;
  std::string json;
  std::string html;
};

// Parses `report_text`, assesses it against `graph` (or a fresh systematic
// exploration within cfg.explore_budget when null) and renders both formats.
// CLI and HTTP both go through here so identical inputs give identical bytes.
AssessmentArtifacts RunAssessment(std::string_view report_text, const AppModel& model,
                                  const ExecutionGraph* graph, const AssessConfig& cfg,
                                  S2RLabeler* labeler = nullptr);

}  // namespace reprolint

#endif  // REPROLINT_REPORT_H_
