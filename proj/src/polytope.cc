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

#include "ambigame/polytope.h"

#include <algorithm>
#include <string>
#include <utility>

#include "ambigame/errors.h"
#include "ambigame/linear_program.h"

namespace ambigame {
namespace {

bool HullContains(const std::vector<Vector>& points, const Vector& x) {
  for (const auto& p : points) {
    if (p == x) return true;
  }
  if (points.empty()) return false;
  const int k = static_cast<int>(points.size());
  const int d = static_cast<int>(x.size());
  LinearProgram lp;
  lp.objective.assign(k, Rational(0));
  lp.bounds.assign(k, VariableBounds{Rational(0), std::nullopt});
  lp.constraints.push_back({Vector(k, Rational(1)), Relation::kEqual, 1});
  for (int c = 0; c < d; ++c) {
    Vector row(k);
    for (int i = 0; i < k; ++i) row[i] = points[i][c];
    lp.constraints.push_back({std::move(row), Relation::kEqual, x[c]});
  }
  return SolveLinearProgram(lp).status == LpStatus::kOptimal;
}

void CheckDimension(const Polytope& p, const Vector& x) {
  if (static_cast<int>(x.size()) != p.ambient_dimension()) {
    throw DimensionMismatch("point has " + std::to_string(x.size()) +
                            " coordinates, polytope lives in dimension " +
                            std::to_string(p.ambient_dimension()));
  }
}

}  // namespace

Polytope::Polytope(int ambient_dimension, std::vector<Vector> vertices)
    : ambient_dimension_(ambient_dimension), vertices_(std::move(vertices)) {
  if (ambient_dimension_ <= 0) {
    throw InvalidArgument("polytope dimension must be positive");
  }
  if (vertices_.empty()) throw InvalidArgument("polytope has no vertices");
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (static_cast<int>(vertices_[i].size()) != ambient_dimension_) {
      throw DimensionMismatch("vertex " + std::to_string(i) + " has " +
                              std::to_string(vertices_[i].size()) +
                              " coordinates, expected " +
                              std::to_string(ambient_dimension_));
    }
  }
}

Polytope Polytope::Point(Vector point) {
  const int d = static_cast<int>(point.size());
  return Polytope(d, {std::move(point)});
}

Polytope UnitSimplex(int dimension) {
  std::vector<Vector> vertices;
  for (int i = 0; i < dimension; ++i) {
    Vector e(dimension);
    e[i] = 1;
    vertices.push_back(std::move(e));
  }
  return Polytope(dimension, std::move(vertices));
}

bool PolytopeContains(const Polytope& p, const Vector& x) {
  CheckDimension(p, x);
  return HullContains(p.vertices(), x);
}

Polytope MinimizePolytope(const Polytope& p) {
  std::vector<Vector> points = p.vertices();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // Removing a redundant point never changes the hull, so one pass suffices.
  for (size_t i = 0; i < points.size();) {
    std::vector<Vector> others;
    others.reserve(points.size() - 1);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.push_back(points[j]);
    }
    if (HullContains(others, points[i])) {
      points.erase(points.begin() + i);
    } else {
      ++i;
    }
  }
  return Polytope(p.ambient_dimension(), std::move(points));
}

bool PolytopesEqual(const Polytope& p, const Polytope& q) {
  if (p.ambient_dimension() != q.ambient_dimension()) {
    throw DimensionMismatch("polytopes live in different dimensions");
  }
  for (const auto& v : p.vertices()) {
    if (!HullContains(q.vertices(), v)) return false;
  }
  for (const auto& v : q.vertices()) {
    if (!HullContains(p.vertices(), v)) return false;
  }
  return true;
}

Polytope AffineImage(const Polytope& p, const Matrix& matrix,
                     const Vector& offset) {
  if (matrix.size() != offset.size()) {
    throw DimensionMismatch("affine map: offset size differs from row count");
  }
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != p.ambient_dimension()) {
      throw DimensionMismatch("affine map: column count " +
                              std::to_string(row.size()) +
                              " differs from polytope dimension " +
                              std::to_string(p.ambient_dimension()));
    }
  }
  std::vector<Vector> images;
  images.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    images.push_back(Add(Multiply(matrix, v), offset));
  }
  return MinimizePolytope(
      Polytope(static_cast<int>(matrix.size()), std::move(images)));
}

Vector ConvexCombination(const std::vector<Vector>& points,
                         const Vector& weights) {
  if (points.size() != weights.size() || points.empty()) {
    throw DimensionMismatch("one weight per point required");
  }
  Vector out(points.front().size());
  for (size_t i = 0; i < points.size(); ++i) {
    if (weights[i] == 0) continue;
    out = Add(out, Scale(weights[i], points[i]));
  }
  return out;
}

std::optional<Polytope> EnumerateVertices(int dimension,
                                          const Matrix& equalities,
                                          const Vector& equality_rhs,
                                          const Matrix& inequalities,
                                          const Vector& inequality_rhs) {
  const int num_eq = static_cast<int>(equalities.size());
  if (Rank(equalities) != num_eq) {
    throw InvalidArgument("equality constraints are linearly dependent");
  }
  const int need = dimension - num_eq;
  const int num_ineq = static_cast<int>(inequalities.size());
  if (need < 0 || need > num_ineq) return std::nullopt;

  auto feasible = [&](const Vector& x) {
    for (int i = 0; i < num_ineq; ++i) {
      if (Dot(inequalities[i], x) < inequality_rhs[i]) return false;
    }
    return true;
  };

  std::vector<Vector> found;
  std::vector<int> pick(need);
  for (int i = 0; i < need; ++i) pick[i] = i;
  while (true) {
    Matrix a = equalities;
    Vector b = equality_rhs;
    for (int idx : pick) {
      a.push_back(inequalities[idx]);
      b.push_back(inequality_rhs[idx]);
    }
    if (auto x = SolveLinearSystem(std::move(a), std::move(b));
        x && feasible(*x)) {
      found.push_back(std::move(*x));
    }
    // Next combination in lexicographic order.
    int pos = need - 1;
    while (pos >= 0 && pick[pos] == num_ineq - need + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < need; ++i) pick[i] = pick[i - 1] + 1;
  }
  if (found.empty()) return std::nullopt;
  return MinimizePolytope(Polytope(dimension, std::move(found)));
}

}  // namespace ambigame
