// Copyright 2026 The griddom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text and SVG pictures of a vertex set on its grid.

#ifndef GRIDDOM_RENDER_HPP_
#define GRIDDOM_RENDER_HPP_

#include <string>
#include <string_view>

#include "griddom/grid.hpp"
#include "griddom/io.hpp"

namespace griddom {

enum class RenderStyle { kAscii, kSvg };

RenderStyle render_style_from_string(std::string_view name);

// ASCII: one row per y from n down to 1, no trailing newline.
//   D  member          O  member listed in meta.orphans
//   .  dominated       !  not k-dominated
// SVG: one circle per vertex; same classes as fill colours.
//
// Throws std::invalid_argument if g differs from the document's grid.
std::string render(const GridSpec& g, const SetDocument& doc,
                   RenderStyle style);

}  // namespace griddom

#endif  // GRIDDOM_RENDER_HPP_
