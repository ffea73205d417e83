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

#include "ambigame/maxmin.h"

#include <utility>

#include "ambigame/errors.h"
#include "ambigame/linear_program.h"

namespace ambigame {

DecisionProblem::DecisionProblem(std::vector<std::string> actions,
                                 Matrix payoff, CredalSet beliefs)
    : actions_(std::move(actions)),
      payoff_(std::move(payoff)),
      beliefs_(std::move(beliefs)) {
  if (actions_.empty()) throw InvalidArgument("decision problem has no actions");
  if (payoff_.size() != actions_.size()) {
    throw DimensionMismatch("payoff matrix has " +
                            std::to_string(payoff_.size()) + " rows for " +
                            std::to_string(actions_.size()) + " actions");
  }
  for (const auto& row : payoff_) {
    if (static_cast<int>(row.size()) != beliefs_.space().size()) {
      throw DimensionMismatch("payoff row has " + std::to_string(row.size()) +
                              " entries for " +
                              std::to_string(beliefs_.space().size()) +
                              " states");
    }
  }
}

Rational DecisionProblem::ExpectedPayoff(const Vector& strategy,
                                         const Vector& prior) const {
  return Dot(LeftMultiply(strategy, payoff_), prior);
}

Rational MaxminValueOf(const Vector& strategy, const DecisionProblem& p) {
  if (static_cast<int>(strategy.size()) != p.strategy_dimension()) {
    throw DimensionMismatch("strategy has " + std::to_string(strategy.size()) +
                            " coordinates, problem has " +
                            std::to_string(p.strategy_dimension()) +
                            " actions");
  }
  const Vector row = LeftMultiply(strategy, p.payoff());
  Rational worst = Dot(row, p.beliefs().vertices().front());
  for (const auto& v : p.beliefs().vertices()) {
    Rational e = Dot(row, v);
    if (e < worst) worst = std::move(e);
  }
  return worst;
}

MaxminSolution SolveConstrainedMaxmin(const DecisionProblem& p,
                                      const Polytope& restriction) {
  const int k = p.strategy_dimension();
  if (restriction.ambient_dimension() != k) {
    throw DimensionMismatch("restriction lives in dimension " +
                            std::to_string(restriction.ambient_dimension()) +
                            ", problem has " + std::to_string(k) + " actions");
  }
  const std::vector<Vector> generators =
      MinimizePolytope(restriction).vertices();
  for (const auto& w : generators) {
    if (!IsProbabilityVector(w)) {
      throw InvalidArgument("restriction vertex " + ToString(w) +
                            " is not a mixed strategy");
    }
  }
  const auto& beliefs = p.beliefs().vertices();
  const int num_gen = static_cast<int>(generators.size());
  const int num_bel = static_cast<int>(beliefs.size());

  // gain[v][j]: payoff of generator j against belief vertex v.
  Matrix gain(num_bel, Vector(num_gen));
  for (int j = 0; j < num_gen; ++j) {
    const Vector row = LeftMultiply(generators[j], p.payoff());
    for (int v = 0; v < num_bel; ++v) gain[v][j] = Dot(row, beliefs[v]);
  }

  // Variables: weights on the generators, then t.
  LinearProgram lp;
  lp.objective.assign(num_gen + 1, Rational(0));
  lp.objective[num_gen] = 1;
  lp.bounds.assign(num_gen + 1, VariableBounds{Rational(0), std::nullopt});
  lp.bounds[num_gen] = VariableBounds{};
  Vector simplex_row(num_gen + 1, Rational(1));
  simplex_row[num_gen] = 0;
  lp.constraints.push_back({simplex_row, Relation::kEqual, 1});
  for (int v = 0; v < num_bel; ++v) {
    Vector row = gain[v];
    row.push_back(-1);
    lp.constraints.push_back({std::move(row), Relation::kGreaterEqual, 0});
  }
  const LpResult lp_result = SolveLinearProgram(lp);
  if (lp_result.status != LpStatus::kOptimal) {
    throw Error("maxmin LP did not reach an optimum");
  }
  const Rational value = lp_result.value;

  // Face of optimal weights, then its image in strategy space.
  Matrix inequalities;
  Vector rhs;
  for (int j = 0; j < num_gen; ++j) {
    Vector e(num_gen);
    e[j] = 1;
    inequalities.push_back(std::move(e));
    rhs.push_back(0);
  }
  for (int v = 0; v < num_bel; ++v) {
    inequalities.push_back(gain[v]);
    rhs.push_back(value);
  }
  auto weight_face =
      EnumerateVertices(num_gen, {Vector(num_gen, Rational(1))}, {Rational(1)},
                        inequalities, rhs);
  if (!weight_face) throw Error("optimal face is unexpectedly empty");
  std::vector<Vector> face_points;
  for (const auto& lambda : weight_face->vertices()) {
    face_points.push_back(ConvexCombination(generators, lambda));
  }
  Polytope face = MinimizePolytope(Polytope(k, std::move(face_points)));

  MaxminSolution solution{value, face.vertices().front(), face, {}};
  const Vector row = LeftMultiply(solution.strategy, p.payoff());
  for (const auto& v : beliefs) {
    if (Dot(row, v) == value) solution.binding_vertices.push_back(v);
  }
  return solution;
}

MaxminSolution SolveMaxmin(const DecisionProblem& p) {
  return SolveConstrainedMaxmin(p, UnitSimplex(p.strategy_dimension()));
}

}  // namespace ambigame
