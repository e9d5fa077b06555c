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

#ifndef REPROLINT_WIREFRAME_H_
#define REPROLINT_WIREFRAME_H_

#include <string>
#include <string_view>

#include "reprolint/app_model.h"

namespace reprolint {

// Schematic SVG of a screen drawn from component bounds and labels. The
// component `highlight_id`, if any, is outlined.
std::string RenderWireframe(const ScreenInstance& screen, std::string_view highlight_id = "");

// Content id of a rendered wireframe: "wf_" + 16 hex digits.
std::string WireframeRef(std::string_view svg);

}  // namespace reprolint

#endif  // REPROLINT_WIREFRAME_H_
