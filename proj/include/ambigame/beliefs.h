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

#ifndef AMBIGAME_BELIEFS_H_
#define AMBIGAME_BELIEFS_H_

#include <optional>
#include <string>
#include <vector>

#include "ambigame/polytope.h"
#include "ambigame/rational.h"

namespace ambigame {

// Ordered, nonempty list of distinct state names.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  // Throws InvalidArgument for unknown labels.
  int IndexOf(const std::string& label) const;

  bool operator==(const StateSpace& other) const = default;

 private:
  std::vector<std::string> labels_;
};

// A closed convex set of priors, stored as the minimized hull of its
// extreme points.
class CredalSet {
 public:
  // Throws InvalidProbability (with the vertex index) if a vertex is not a
  // distribution over `space`.
  CredalSet(StateSpace space, const Polytope& set);
  CredalSet(StateSpace space, std::vector<Vector> vertices);

  const StateSpace& space() const { return space_; }
  const Polytope& polytope() const { return set_; }
  const std::vector<Vector>& vertices() const { return set_.vertices(); }
  int num_vertices() const { return set_.num_vertices(); }

  bool Contains(const Vector& prior) const;

 private:
  StateSpace space_;
  Polytope set_;
};

// Same states and same hull.
bool CredalSetsEqual(const CredalSet& a, const CredalSet& b);

// Cells are lists of state indices.
using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

// Intermediate stages of an information filtration. Stage 0 (the whole
// space) and the final stage (singletons) are implicit; `stages` holds the
// ones in between, each refining the previous.
class Filtration {
 public:
  // Throws InvalidArgument unless each stage partitions the space and
  // refines its predecessor.
  Filtration(StateSpace space, std::vector<Partition> stages);

  // Builds stages from label lists, e.g. {{{"L","R"},{"O"}}}.
  static Filtration FromLabels(
      StateSpace space,
      const std::vector<std::vector<std::vector<std::string>>>& stages);

  const StateSpace& space() const { return space_; }
  const std::vector<Partition>& stages() const { return stages_; }
  int num_stages() const { return static_cast<int>(stages_.size()); }

 private:
  StateSpace space_;
  std::vector<Partition> stages_;
};

// "{L,R}"
std::string CellName(const StateSpace& space, const Cell& cell);

// (1 - eps) * center + eps * simplex, as the hull of the mixtures of
// `center` with each point mass. Throws InvalidArgument unless
// 0 <= eps <= 1 and `center` is a distribution over `space`.
CredalSet EpsContamination(const StateSpace& space, const Vector& center,
                           const Rational& eps);

// Probability mass of `cell` under `prior`.
Rational CellMass(const Vector& prior, const Cell& cell);

// Restrict-and-normalize. Throws ZeroProbabilityReach if `prior` gives the
// event probability zero.
Vector ConditionPrior(const Vector& prior, const Cell& event);

// Full Bayesian updating of every prior in `c` on `event`. The result lives
// on the event's states (in increasing index order). Throws
// ZeroProbabilityReach naming the first vertex that gives the event zero
// mass.
CredalSet FullBayesUpdate(const CredalSet& c, const Cell& event);

// Image of `c` under p -> (mass of each cell). States of the result are the
// cell names.
CredalSet OneStepAhead(const CredalSet& c, const Partition& partition);

// Smallest set containing `c` that is closed under recombining any of its
// one-step-ahead marginals with any of its conditionals, applied
// recursively from the last stage of `f` backward.
//
// A cell with zero mass under every prior is dropped. A cell with two or
// more states and zero mass under some but not all priors has no
// well-defined conditional set and raises ZeroProbabilityReach.
CredalSet RectangularHull(const CredalSet& c, const Filtration& f);

struct RectangularityResult {
  bool rectangular = false;
  // A vertex of the rectangular hull outside the set, when not rectangular.
  std::optional<Vector> witness;
};

RectangularityResult CheckRectangular(const CredalSet& c, const Filtration& f);

}  // namespace ambigame

#endif  // AMBIGAME_BELIEFS_H_
