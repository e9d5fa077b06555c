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

#include "reprolint/wireframe.h"

#include <sstream>

#include "reprolint/hash.h"

namespace reprolint {
namespace {

std::string Escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

const char* Fill(ComponentType type) {
  switch (type) {
    case ComponentType::kButton: return "#dbe7f5";
    case ComponentType::kMenuItem: return "#e8eef5";
    case ComponentType::kTextField: return "#ffffff";
    case ComponentType::kCheckbox: return "#eef5e8";
    case ComponentType::kDropDown: return "#f5f0e1";
    case ComponentType::kImageView: return "#e6e6e6";
    default: return "none";
  }
}

void Draw(std::ostringstream& out, const GuiComponent& c, std::string_view highlight_id,
          bool is_root) {
  const Bounds& b = c.bounds;
  if (!is_root) {
    out << "<rect x=\"" << b.x << "\" y=\"" << b.y << "\" width=\"" << b.width
        << "\" height=\"" << b.height << "\" fill=\"" << Fill(c.type)
        << "\" stroke=\"#8a8a8a\" stroke-width=\"1\"";
    if (!c.flags.enabled) out << " stroke-dasharray=\"4 2\"";
    out << "><title>" << Escape(ComponentTypeName(c.type)) << " " << Escape(c.id)
        << "</title></rect>\n";
    std::string text = c.label;
    if (!c.value.empty() && c.type == ComponentType::kTextField) text = c.value;
    if (text.empty()) text = c.description;
    if (!text.empty() && c.children.empty()) {
      if (c.type == ComponentType::kCheckbox) {
        out << "<rect x=\"" << b.x + 6 << "\" y=\"" << b.y + b.height / 2 - 7
            << "\" width=\"14\" height=\"14\" fill=\""
            << (c.value == "checked" ? "#555555" : "#ffffff") << "\" stroke=\"#555555\"/>\n";
      }
      int indent = c.type == ComponentType::kCheckbox ? 26 : 8;
      out << "<text x=\"" << b.x + indent << "\" y=\"" << b.y + b.height / 2 + 5
          << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\""
          << (c.type == ComponentType::kTextField && c.value.empty() ? "#999999" : "#222222")
          << "\">" << Escape(text) << "</text>\n";
    }
  }
  for (const auto& child : c.children) Draw(out, child, highlight_id, false);
}

}  // namespace

std::string RenderWireframe(const ScreenInstance& screen, std::string_view highlight_id) {
  const Bounds& r = screen.root.bounds;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << r.width << "\" height=\""
      << r.height << "\" viewBox=\"0 0 " << r.width << " " << r.height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << r.width << "\" height=\"" << r.height
      << "\" fill=\"#fafafa\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
  out << "<text x=\"8\" y=\"" << r.height - 8
      << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#777777\">"
      << Escape(screen.name) << "</text>\n";
  Draw(out, screen.root, highlight_id, true);
  if (!highlight_id.empty()) {
    for (const GuiComponent* c : screen.Components()) {
      if (c->id != highlight_id) continue;
      const Bounds& b = c->bounds;
      out << "<rect x=\"" << b.x - 2 << "\" y=\"" << b.y - 2 << "\" width=\"" << b.width + 4
          << "\" height=\"" << b.height + 4
          << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string WireframeRef(std::string_view svg) { return "wf_" + ShortHash(svg); }

}  // namespace reprolint
