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

#include "griddom/render.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "griddom/construct.hpp"

namespace griddom {

RenderStyle render_style_from_string(std::string_view name) {
  if (name == "ascii") return RenderStyle::kAscii;
  if (name == "svg") return RenderStyle::kSvg;
  throw std::invalid_argument("unknown render style '" + std::string(name) +
                              "'");
}

namespace {

char glyph(const SetDocument& doc, const VertexSet& orphans,
           const std::vector<int>& coverage, const GridSpec& g, Vertex v) {
  if (doc.vertices.contains(v)) return orphans.contains(v) ? 'O' : 'D';
  return coverage[g.index(v)] > 0 ? '.' : '!';
}

constexpr int kCell = 20;

std::string svg(const GridSpec& g, const SetDocument& doc,
                const VertexSet& orphans, const std::vector<int>& coverage) {
  std::ostringstream out;
  const int width = g.m() * kCell;
  const int height = g.n() * kCell;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  for (Vertex v : g.vertices()) {
    const int cx = (v.x - 1) * kCell + kCell / 2;
    const int cy = (g.n() - v.y) * kCell + kCell / 2;  // y grows upwards
    const char c = glyph(doc, orphans, coverage, g, v);
    out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"6\" ";
    switch (c) {
      case 'D':
        out << "fill=\"black\"";
        break;
      case 'O':
        out << "fill=\"#d04010\"";
        break;
      case '.':
        out << "fill=\"#c8c8c8\"";
        break;
      default:
        out << "fill=\"none\" stroke=\"red\" stroke-width=\"2\"";
        break;
    }
    out << "/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const GridSpec& g, const SetDocument& doc,
                   RenderStyle style) {
  if (!(g == doc.grid())) {
    throw std::invalid_argument("document does not describe this grid");
  }
  for (Vertex v : doc.vertices) {
    if (!g.contains(v)) throw std::invalid_argument("vertex outside the grid");
  }
  const VertexSet orphans = meta_orphans(doc);
  const std::vector<int> coverage =
      verify_k_domination(g, doc.vertices, doc.k).coverage;
  if (style == RenderStyle::kSvg) return svg(g, doc, orphans, coverage);

  std::string out;
  out.reserve(static_cast<std::size_t>(g.n()) * (g.m() + 1));
  for (int y = g.n(); y >= 1; --y) {
    for (int x = 1; x <= g.m(); ++x) {
      out += glyph(doc, orphans, coverage, g, {x, y});
    }
    if (y > 1) out += '\n';
  }
  return out;
}

}  // namespace griddom
