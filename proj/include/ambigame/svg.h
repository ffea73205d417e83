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

// Probability-triangle drawings of credal sets as SVG 1.1.
//
// A prior over three states is drawn at (p[x], p[y]) inside the right
// triangle with its legs on the axes; the remaining state is implicit.

#ifndef AMBIGAME_SVG_H_
#define AMBIGAME_SVG_H_

#include <string>
#include <vector>

#include "ambigame/beliefs.h"
#include "ambigame/rational.h"

namespace ambigame {

enum class SetStyle { kPrimary, kHull, kUpdate };

struct PlotSet {
  std::vector<Vector> points;       // Two coordinates each.
  std::vector<std::string> labels;  // Empty, or one per point ("" for none).
  SetStyle style = SetStyle::kPrimary;
};

struct TrianglePanel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSet> sets;  // Drawn in order.
};

// Projects `c` onto the coordinates of states `x` and `y`. Throws
// InvalidArgument if the space has fewer than two states or `x == y`.
PlotSet ProjectCredalSet(const CredalSet& c, int x, int y,
                         std::vector<std::string> labels = {},
                         SetStyle style = SetStyle::kPrimary);

// Exact convex hull of planar points, counterclockwise from the
// lexicographically smallest; collinear and repeated points removed.
std::vector<Vector> PlanarHull(std::vector<Vector> points);

// One 512x512 panel, or several placed side by side as nested <svg>
// elements. Byte-identical output for identical input.
std::string RenderTriangles(const std::vector<TrianglePanel>& panels);

}  // namespace ambigame

#endif  // AMBIGAME_SVG_H_
