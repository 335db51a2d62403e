// Copyright 2026 The Relfair Authors.
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

#include "relfair/svg.hpp"

#include <algorithm>
#include <sstream>

#include "relfair/errors.hpp"

namespace relfair {

namespace {

constexpr int kCanvas = 480;

struct Mapper {
  Rat span;  // world units shown per axis (ideal point + 10% margin)
  std::string x(const Rat& wx) const { return format_decimal(wx * kCanvas / span, 3); }
  std::string y(const Rat& wy) const { return format_decimal((span - wy) * kCanvas / span, 3); }
};

// Sorts the vertices of a convex 2D polygon counterclockwise around the
// centroid, with exact cross-product comparisons.
std::vector<Point> polygon_order(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  Point center = {Rat(0), Rat(0)};
  for (const Point& p : pts) {
    center[0] += p[0];
    center[1] += p[1];
  }
  center[0] /= static_cast<int>(pts.size());
  center[1] /= static_cast<int>(pts.size());
  auto half = [&](const Point& p) {  // below / above the center line
    if (p[1] != center[1]) return p[1] < center[1] ? 0 : 1;
    return p[0] >= center[0] ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    const Rat cross = (a[0] - center[0]) * (b[1] - center[1]) -
                      (a[1] - center[1]) * (b[0] - center[0]);
    if (cross != 0) return cross > 0;
    return lex_less(a, b);
  });
  return pts;
}

}  // namespace

std::string render_svg(const Problem& x, const Rule& rule) {
  if (x.dim() != 2) throw bad_parameter_error("plots are only available for two-person problems");
  const Point b = ideal_point(x);
  Mapper map;
  map.span = std::max(b[0], b[1]) * Rat(11, 10);

  const ChoiceSet cs = solve(rule, x);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" fill=\"white\"/>\n";

  // Generator boxes.
  for (const Point& g : x.generators()) {
    out << "<rect x=\"" << map.x(Rat(0)) << "\" y=\"" << map.y(g[1]) << "\" width=\""
        << format_decimal(g[0] * kCanvas / map.span, 3) << "\" height=\""
        << format_decimal(g[1] * kCanvas / map.span, 3)
        << "\" fill=\"#d0d0d0\" fill-opacity=\"0.6\" stroke=\"#808080\" stroke-width=\"1\"/>\n";
  }

  // Choice-set pieces in red.
  for (const HPolyhedron& piece : cs.pieces) {
    const auto vertices = enumerate_vertices(piece, 5000);
    if (!vertices || vertices->empty()) continue;
    const std::vector<Point> poly = polygon_order(*vertices);
    if (poly.size() == 1) {
      out << "<circle cx=\"" << map.x(poly[0][0]) << "\" cy=\"" << map.y(poly[0][1])
          << "\" r=\"4\" fill=\"#d62728\"/>\n";
    } else if (poly.size() == 2) {
      out << "<line x1=\"" << map.x(poly[0][0]) << "\" y1=\"" << map.y(poly[0][1]) << "\" x2=\""
          << map.x(poly[1][0]) << "\" y2=\"" << map.y(poly[1][1])
          << "\" stroke=\"#d62728\" stroke-width=\"4\"/>\n";
    } else {
      out << "<polygon points=\"";
      for (size_t i = 0; i < poly.size(); ++i) {
        if (i) out << " ";
        out << map.x(poly[i][0]) << "," << map.y(poly[i][1]);
      }
      out << "\" fill=\"#d62728\" fill-opacity=\"0.5\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }
  }

  // Witness markers; the KS point is blue.
  const bool ks = rule.kind == RuleKind::ks;
  for (const Point& w : cs.witnesses) {
    out << "<circle cx=\"" << map.x(w[0]) << "\" cy=\"" << map.y(w[1]) << "\" r=\"5\" fill=\""
        << (ks ? "#1f77b4" : "#d62728") << "\"/>\n";
  }

  // Ideal point cross.
  out << "<path d=\"M " << map.x(b[0]) << " " << map.y(b[1]) << " m -5 -5 l 10 10 m -10 0 l 10 -10"
      << "\" stroke=\"black\" stroke-width=\"2\" fill=\"none\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace relfair
