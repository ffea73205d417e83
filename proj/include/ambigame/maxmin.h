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

#ifndef AMBIGAME_MAXMIN_H_
#define AMBIGAME_MAXMIN_H_

#include <string>
#include <vector>

#include "ambigame/beliefs.h"
#include "ambigame/polytope.h"
#include "ambigame/rational.h"

namespace ambigame {

// Choose a distribution over `actions` to maximize the worst expected
// payoff over `beliefs`. payoff[a][s] is the utility of action a in state s.
class DecisionProblem {
 public:
  // Throws DimensionMismatch unless payoff is actions x states.
  DecisionProblem(std::vector<std::string> actions, Matrix payoff,
                  CredalSet beliefs);

  int strategy_dimension() const { return static_cast<int>(actions_.size()); }
  const std::vector<std::string>& actions() const { return actions_; }
  const Matrix& payoff() const { return payoff_; }
  const CredalSet& beliefs() const { return beliefs_; }
  const StateSpace& space() const { return beliefs_.space(); }

  // Expected payoff of `strategy` under `prior`.
  Rational ExpectedPayoff(const Vector& strategy, const Vector& prior) const;

 private:
  std::vector<std::string> actions_;
  Matrix payoff_;
  CredalSet beliefs_;
};

struct MaxminSolution {
  Rational value;
  // Lexicographically smallest vertex of optimal_face.
  Vector strategy;
  // Every strategy attaining `value`, minimized.
  Polytope optimal_face;
  // Belief vertices at which `strategy` attains `value`.
  std::vector<Vector> binding_vertices;
};

// Worst-case expected payoff of `strategy`. The minimum of a linear function
// over a polytope is attained at a vertex, so only vertices are scanned.
Rational MaxminValueOf(const Vector& strategy, const DecisionProblem& p);

// max over the strategy simplex of MaxminValueOf, as the LP
//   max t  s.t.  strategy . payoff . v >= t for every belief vertex v.
MaxminSolution SolveMaxmin(const DecisionProblem& p);

// Same, with the strategy restricted to a sub-polytope of the simplex.
// Throws InvalidArgument if `restriction` leaves the simplex.
MaxminSolution SolveConstrainedMaxmin(const DecisionProblem& p,
                                      const Polytope& restriction);

}  // namespace ambigame

#endif  // AMBIGAME_MAXMIN_H_
