// Copyright 2026 The ambigame Authors. All rights reserved.
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

#include "ambigame/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>

#include "ambigame/errors.h"

namespace ambigame {
namespace {

constexpr double kSize = 512;
constexpr double kMargin = 56;
constexpr double kSide = kSize - 2 * kMargin;

double PixelX(const Rational& x) { return kMargin + kSide * ToDouble(x); }
double PixelY(const Rational& y) { return kSize - kMargin - kSide * ToDouble(y); }

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  // Avoid "-0.00".
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

Rational Cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::string PointLabel(const PlotSet& set, const Vector& p) {
  for (size_t i = 0; i < set.points.size() && i < set.labels.size(); ++i) {
    if (set.points[i] == p && !set.labels[i].empty()) return set.labels[i];
  }
  return "(" + ToString(p[0]) + ", " + ToString(p[1]) + ")";
}

void DrawAxes(std::ostringstream& out, const TrianglePanel& panel) {
  const std::string x0 = Num(PixelX(0)), x1 = Num(PixelX(1));
  const std::string y0 = Num(PixelY(0)), y1 = Num(PixelY(1));
  out << "  <rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"#ffffff\"/>\n";
  out << "  <polygon points=\"" << x0 << "," << y0 << " " << x1 << "," << y0
      << " " << x0 << "," << y1
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  out << "  <text x=\"" << x0 << "\" y=\"" << Num(PixelY(0) + 20)
      << "\" text-anchor=\"middle\" font-size=\"14\">0</text>\n";
  out << "  <text x=\"" << x1 << "\" y=\"" << Num(PixelY(0) + 20)
      << "\" text-anchor=\"middle\" font-size=\"14\">1</text>\n";
  out << "  <text x=\"" << Num(PixelX(0) - 14) << "\" y=\"" << Num(PixelY(1) + 5)
      << "\" text-anchor=\"middle\" font-size=\"14\">1</text>\n";
  out << "  <text x=\"" << Num(PixelX(Rational(1, 2))) << "\" y=\""
      << Num(PixelY(0) + 40) << "\" text-anchor=\"middle\" font-size=\"16\">"
      << Escape(panel.x_label) << "</text>\n";
  out << "  <text x=\"" << Num(PixelX(0) - 30) << "\" y=\""
      << Num(PixelY(Rational(1, 2))) << "\" text-anchor=\"middle\" "
      << "font-size=\"16\">" << Escape(panel.y_label) << "</text>\n";
  if (!panel.title.empty()) {
    out << "  <text x=\"256\" y=\"28\" text-anchor=\"middle\" font-size=\"18\">"
        << Escape(panel.title) << "</text>\n";
  }
}

void DrawSet(std::ostringstream& out, const PlotSet& set,
             std::set<std::pair<std::string, std::string>>& labelled) {
  const std::vector<Vector> hull = PlanarHull(set.points);
  if (hull.empty()) return;
  std::string fill = "#9ecae1", stroke = "#08519c", extra;
  if (set.style == SetStyle::kHull) {
    fill = "#fdd0a2";
    stroke = "#d94801";
    extra = " stroke-dasharray=\"6,4\"";
  } else if (set.style == SetStyle::kUpdate) {
    fill = "#cb181d";
    stroke = "#cb181d";
  }
  if (hull.size() == 1) {
    out << "  <circle cx=\"" << Num(PixelX(hull[0][0])) << "\" cy=\""
        << Num(PixelY(hull[0][1])) << "\" r=\"5\" fill=\"" << stroke << "\"/>\n";
  } else if (hull.size() == 2) {
    const double width = set.style == SetStyle::kUpdate ? 6 : 4;
    out << "  <line x1=\"" << Num(PixelX(hull[0][0])) << "\" y1=\""
        << Num(PixelY(hull[0][1])) << "\" x2=\"" << Num(PixelX(hull[1][0]))
        << "\" y2=\"" << Num(PixelY(hull[1][1])) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"" << Num(width) << "\" stroke-linecap=\"round\"/>\n";
  } else {
    out << "  <polygon points=\"";
    for (size_t i = 0; i < hull.size(); ++i) {
      if (i > 0) out << " ";
      out << Num(PixelX(hull[i][0])) << "," << Num(PixelY(hull[i][1]));
    }
    out << "\" fill=\"" << fill << "\" fill-opacity=\"0.6\" stroke=\"" << stroke
        << "\" stroke-width=\"2\"" << extra << "/>\n";
  }
  // Labels sit just outside the set, pushed away from its centroid.
  double cx = 0, cy = 0;
  for (const auto& p : hull) {
    cx += PixelX(p[0]);
    cy += PixelY(p[1]);
  }
  cx /= hull.size();
  cy /= hull.size();
  for (const auto& p : hull) {
    const double px = PixelX(p[0]), py = PixelY(p[1]);
    double dx = px - cx, dy = py - cy;
    const double len = std::hypot(dx, dy);
    if (len < 1e-9) {
      dx = 1;
      dy = -1;
    } else {
      dx /= len;
      dy /= len;
    }
    // Shared corners of several sets are marked once.
    if (!labelled.insert({Num(px), Num(py)}).second) continue;
    out << "  <circle cx=\"" << Num(px) << "\" cy=\"" << Num(py)
        << "\" r=\"2.5\" fill=\"#000000\"/>\n";
    out << "  <text x=\"" << Num(px + 16 * dx) << "\" y=\"" << Num(py + 16 * dy + 4)
        << "\" text-anchor=\"middle\" font-size=\"13\">"
        << Escape(PointLabel(set, p)) << "</text>\n";
  }
}

}  // namespace

PlotSet ProjectCredalSet(const CredalSet& c, int x, int y,
                         std::vector<std::string> labels, SetStyle style) {
  const int n = c.space().size();
  if (n < 2 || x == y || x < 0 || y < 0 || x >= n || y >= n) {
    throw InvalidArgument(
        "state space not reducible to 2 plot coordinates");
  }
  PlotSet set;
  set.style = style;
  for (const auto& v : c.vertices()) set.points.push_back({v[x], v[y]});
  set.labels = std::move(labels);
  return set;
}

std::vector<Vector> PlanarHull(std::vector<Vector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;
  // Andrew's monotone chain, strict turns only.
  std::vector<Vector> hull(2 * points.size());
  size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && Cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && Cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::string RenderTriangles(const std::vector<TrianglePanel>& panels) {
  std::ostringstream out;
  const size_t count = std::max<size_t>(1, panels.size());
  const std::string width = std::to_string(512 * count);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"512\" viewBox=\"0 0 " << width
      << " 512\" font-family=\"serif\">\n";
  for (size_t i = 0; i < panels.size(); ++i) {
    out << "<svg x=\"" << 512 * i
        << "\" y=\"0\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n";
    DrawAxes(out, panels[i]);
    std::set<std::pair<std::string, std::string>> labelled;
    for (const auto& set : panels[i].sets) DrawSet(out, set, labelled);
    out << "</svg>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ambigame
