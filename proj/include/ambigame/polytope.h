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

#ifndef AMBIGAME_POLYTOPE_H_
#define AMBIGAME_POLYTOPE_H_

#include <optional>
#include <vector>

#include "ambigame/rational.h"

namespace ambigame {

// Convex hull of a nonempty finite point set (V-representation). The vertex
// list is kept as given; use MinimizePolytope for the canonical form.
class Polytope {
 public:
  // Throws InvalidArgument if `vertices` is empty and DimensionMismatch if a
  // vertex does not have `ambient_dimension` coordinates.
  Polytope(int ambient_dimension, std::vector<Vector> vertices);

  static Polytope Point(Vector point);

  int ambient_dimension() const { return ambient_dimension_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }

 private:
  int ambient_dimension_;
  std::vector<Vector> vertices_;
};

// Standard simplex {x >= 0, sum x = 1} in `dimension` coordinates.
Polytope UnitSimplex(int dimension);

// Exact membership, decided by LP feasibility of the convex-combination
// system.
bool PolytopeContains(const Polytope& p, const Vector& x);

// Drops duplicate and non-extreme vertices. The survivors are sorted
// lexicographically, so equal hulls minimize to identical vertex lists.
Polytope MinimizePolytope(const Polytope& p);

// Hull equality: every vertex of each lies in the other.
bool PolytopesEqual(const Polytope& p, const Polytope& q);

// Minimized hull of {matrix * v + offset}.
Polytope AffineImage(const Polytope& p, const Matrix& matrix,
                     const Vector& offset);

// Point sum_i weights[i] * vertices[i]; weights need not be normalized.
Vector ConvexCombination(const std::vector<Vector>& points,
                         const Vector& weights);

// Vertices of the bounded polyhedron
//   {x : equalities x = equality_rhs, inequalities x >= inequality_rhs},
// found by solving every square system of active constraints. Returns
// nullopt when the set is empty. The equality rows must be linearly
// independent and the set must be bounded.
std::optional<Polytope> EnumerateVertices(int dimension,
                                          const Matrix& equalities,
                                          const Vector& equality_rhs,
                                          const Matrix& inequalities,
                                          const Vector& inequality_rhs);

}  // namespace ambigame

#endif  // AMBIGAME_POLYTOPE_H_
