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

#include "reprolint/report.h"

#include <optional>
#include <sstream>

namespace reprolint {
namespace {

using nlohmann::json;

std::string Surfaces(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

json InteractionJson(const InteractionView& v) {
  json j;
  j["event"] = std::string(EventKindName(v.event.kind));
  j["componentId"] = v.component_id;
  j["componentLabel"] = v.component_label;
  j["input"] = v.event.input ? json(*v.event.input) : json(nullptr);
  j["sourceScreen"] = v.source_screen;
  j["targetScreen"] = v.target_screen;
  j["wireframeRef"] = v.wireframe_ref;
  j["description"] = v.description;
  return j;
}

json AnnotationJson(const Annotation& a) {
  json evidence = json::object();
  json refs = json::array();
  switch (a.kind) {
    case AnnotationKind::kHQ:
      evidence["interaction"] = InteractionJson(a.interactions.at(0));
      evidence["distance"] = a.distance.value_or(0);
      evidence["score"] = a.score.value_or(1.0);
      refs.push_back(a.interactions.at(0).wireframe_ref);
      break;
    case AnnotationKind::kMS:
      evidence["interactions"] = json::array();
      for (const InteractionView& v : a.interactions) {
        evidence["interactions"].push_back(InteractionJson(v));
        refs.push_back(v.wireframe_ref);
      }
      break;
    case AnnotationKind::kAS:
      evidence["candidates"] = json::array();
      for (std::size_t i = 0; i < a.candidates.size(); ++i) {
        const Candidate& c = a.candidates[i];
        evidence["candidates"].push_back({{"event", std::string(EventKindName(c.event))},
                                          {"componentId", c.component_id},
                                          {"label", c.label},
                                          {"score", c.score},
                                          {"wireframeRef", a.candidate_refs.at(i)}});
        refs.push_back(a.candidate_refs.at(i));
      }
      break;
    case AnnotationKind::kVM:
      evidence["constituents"] = json::array();
      for (const FailedConstituent& f : a.failed) {
        evidence["constituents"].push_back({{"constituent", f.constituent}, {"text", f.text}});
      }
      break;
  }
  evidence["detail"] = a.detail;
  return {{"kind", std::string(AnnotationName(a.kind))},
          {"evidence", std::move(evidence)},
          {"wireframeRefs", std::move(refs)}};
}

json StepJson(std::size_t index, const StepAssessment& s) {
  json tuple = {{"action", s.step.action},
                {"object", Surfaces(s.step.object)},
                {"preposition", s.step.preposition ? s.step.preposition->surface : ""},
                {"object2", Surfaces(s.step.object2)},
                {"text", s.step.ToString()}};
  json annotations = json::array();
  for (const Annotation& a : s.annotations) annotations.push_back(AnnotationJson(a));
  return {{"index", index},
          {"sentenceIndex", s.step.sentence_index},
          {"clauseIndex", s.step.clause_index},
          {"text", s.sentence},
          {"span", {{"begin", s.span.begin}, {"end", s.span.end}}},
          {"tuple", std::move(tuple)},
          {"annotations", std::move(annotations)}};
}

json DiagnosticsJson(const Diagnostics& d) {
  json dropped = json::array();
  for (const DroppedSentence& s : d.dropped) {
    dropped.push_back({{"sentenceIndex", s.sentence_index}, {"text", s.text}, {"reason", s.reason}});
  }
  const ExplorationStats& e = d.exploration;
  return {{"sentences", d.sentences},
          {"labels", d.labels},
          {"droppedSentences", std::move(dropped)},
          {"unresolvedSteps", d.unresolved_steps},
          {"exploration",
           {{"initialVertices", e.initial_vertices},
            {"initialEdges", e.initial_edges},
            {"finalVertices", e.final_vertices},
            {"finalEdges", e.final_edges},
            {"randomIterations", e.random_iterations},
            {"randomInteractions", e.random_interactions},
            {"divergences", e.divergences}}}};
}

const char* BadgeClass(AnnotationKind kind) {
  switch (kind) {
    case AnnotationKind::kHQ: return "hq";
    case AnnotationKind::kAS: return "as";
    case AnnotationKind::kVM: return "vm";
    case AnnotationKind::kMS: return "ms";
  }
  return "";
}

const char* BadgeTitle(AnnotationKind kind) {
  switch (kind) {
    case AnnotationKind::kHQ: return "High quality";
    case AnnotationKind::kAS: return "Ambiguous step";
    case AnnotationKind::kVM: return "Vocabulary mismatch";
    case AnnotationKind::kMS: return "Missing steps";
  }
  return "";
}

std::string Link(const std::string& ref, const std::string& text) {
  return "<a href=\"#" + HtmlEscape(ref) + "\">" + HtmlEscape(text) + "</a>";
}

constexpr const char* kStyle = R"(
body{font-family:sans-serif;max-width:60rem;margin:2rem auto;color:#222}
ol.steps>li{margin:1rem 0;padding:.5rem 1rem;border-left:4px solid #ccc}
.badge{display:inline-block;padding:0 .4rem;margin-right:.4rem;border-radius:3px;color:#fff;font-weight:bold}
.hq{background:#2e7d32}.as{background:#ef6c00}.vm{background:#c62828}.ms{background:#1565c0}
.tuple{font-family:monospace;color:#555}
.modal{display:none;position:fixed;inset:0;background:rgba(0,0,0,.6)}
.modal:target{display:flex;align-items:center;justify-content:center}
.modal>div{background:#fff;padding:1rem;border-radius:4px}
)";

}  // namespace

std::string HtmlEscape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += ch;
    }
  }
  return out;
}

json ReportToJson(const QualityReport& report) {
  json steps = json::array();
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    steps.push_back(StepJson(i, report.steps[i]));
  }
  json wireframes = json::object();
  for (const auto& [ref, svg] : report.wireframes) wireframes[ref] = svg;
  return {{"schemaVersion", kReportSchemaVersion},
          {"reportId", report.report_id},
          {"title", report.title},
          {"app", report.app_name},
          {"s2rs", std::move(steps)},
          {"diagnostics", DiagnosticsJson(report.diagnostics)},
          {"configEcho", report.config_echo},
          {"wireframes", std::move(wireframes)}};
}

std::string RenderJson(const QualityReport& report) {
  return ReportToJson(report).dump(2) + "\n";
}

std::string RenderHtml(const QualityReport& report) {
  std::ostringstream out;
  const std::string title = report.title.empty() ? "Bug report" : report.title;
  out << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
      << "<title>Quality report: " << HtmlEscape(title) << "</title>\n<style>" << kStyle
      << "</style>\n</head>\n<body>\n";
  out << "<h1>Quality report</h1>\n<p><strong>" << HtmlEscape(title) << "</strong> on "
      << HtmlEscape(report.app_name) << " <code>" << HtmlEscape(report.report_id)
      << "</code></p>\n";

  if (report.steps.empty()) {
    out << "<p>No steps to reproduce were found in this report.</p>\n";
  } else {
    out << "<ol class=\"steps\">\n";
    for (const StepAssessment& s : report.steps) {
      out << "<li>\n<p>" << HtmlEscape(s.sentence) << "</p>\n<p class=\"tuple\">"
          << HtmlEscape(s.step.ToString()) << "</p>\n";
      for (const Annotation& a : s.annotations) {
        out << "<div><span class=\"badge " << BadgeClass(a.kind) << "\" title=\""
            << BadgeTitle(a.kind) << "\">" << AnnotationName(a.kind) << "</span>";
        switch (a.kind) {
          case AnnotationKind::kHQ: {
            const InteractionView& v = a.interactions.at(0);
            out << "Matches " << Link(v.wireframe_ref, v.description) << " on "
                << HtmlEscape(v.source_screen);
            break;
          }
          case AnnotationKind::kMS:
            out << "Steps missing before this one:\n<ol>\n";
            for (const InteractionView& v : a.interactions) {
              out << "<li>" << Link(v.wireframe_ref, v.description) << " on "
                  << HtmlEscape(v.source_screen) << "</li>\n";
            }
            out << "</ol>\n";
            break;
          case AnnotationKind::kAS:
            out << "The step matches several interactions:\n<ul>\n";
            for (std::size_t i = 0; i < a.candidates.size(); ++i) {
              const Candidate& c = a.candidates[i];
              std::string text = std::string(EventKindName(c.event));
              if (!c.label.empty()) text += " \"" + c.label + "\"";
              out << "<li>" << Link(a.candidate_refs.at(i), text) << "</li>\n";
            }
            out << "</ul>\n";
            break;
          case AnnotationKind::kVM:
            out << "No app interaction matches";
            for (const FailedConstituent& f : a.failed) {
              out << " the " << HtmlEscape(f.constituent) << " &quot;" << HtmlEscape(f.text)
                  << "&quot;";
            }
            break;
        }
        out << "</div>\n";
      }
      out << "</li>\n";
    }
    out << "</ol>\n";
  }

  const Diagnostics& d = report.diagnostics;
  out << "<h2>Diagnostics</h2>\n<ul>\n<li>" << d.sentences << " sentences, "
      << report.steps.size() << " steps</li>\n";
  for (const DroppedSentence& s : d.dropped) {
    out << "<li>Dropped: " << HtmlEscape(s.text) << " (" << HtmlEscape(s.reason) << ")</li>\n";
  }
  out << "<li>Execution model: " << d.exploration.final_vertices << " screens, "
      << d.exploration.final_edges << " interactions</li>\n</ul>\n";

  for (const auto& [ref, svg] : report.wireframes) {
    out << "<div class=\"modal\" id=\"" << HtmlEscape(ref) << "\"><div><a href=\"#\">Close</a>\n"
        << svg << "</div></div>\n";
  }
  out << "</body>\n</html>\n";
  return out.str();
}

AssessmentArtifacts RunAssessment(std::string_view report_text, const AppModel& model,
                                  const ExecutionGraph* graph, const AssessConfig& cfg,
                                  S2RLabeler* labeler) {
  BugReport report = ParseReport(report_text);
  std::optional<ExecutionGraph> explored;
  if (!graph) graph = &explored.emplace(ExploreGraph(model, cfg.explore_budget));
  AssessmentArtifacts out;
  out.report = Assess(report, model, *graph, cfg, labeler);
  out.json = RenderJson(out.report);
  out.html = RenderHtml(out.report);
  return out;
}

}  // namespace reprolint
