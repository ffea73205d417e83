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

#include "ambigame/beliefs.h"

#include <algorithm>
#include <set>
#include <utility>

#include "ambigame/errors.h"

namespace ambigame {
namespace {

Polytope CheckedPolytope(const StateSpace& space, std::vector<Vector> vertices) {
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (static_cast<int>(vertices[i].size()) != space.size()) {
      throw InvalidProbability("vertex " + std::to_string(i) + " has " +
                                   std::to_string(vertices[i].size()) +
                                   " coordinates for " +
                                   std::to_string(space.size()) + " states",
                               static_cast<int>(i));
    }
    if (!IsProbabilityVector(vertices[i])) {
      throw InvalidProbability("vertex " + std::to_string(i) + " " +
                                   ToString(vertices[i]) +
                                   " is not a probability vector",
                               static_cast<int>(i));
    }
  }
  if (vertices.empty()) throw InvalidArgument("credal set has no vertices");
  return MinimizePolytope(Polytope(space.size(), std::move(vertices)));
}

// Cells of stage `t` (0 = whole space) that lie inside `cell`.
Partition ChildrenOf(const Filtration& f, const Cell& cell, int t) {
  const int n = f.space().size();
  Partition next;
  if (t < f.num_stages()) {
    next = f.stages()[t];
  } else {
    for (int s = 0; s < n; ++s) next.push_back({s});
  }
  Partition children;
  for (const auto& c : next) {
    if (std::includes(cell.begin(), cell.end(), c.begin(), c.end())) {
      children.push_back(c);
    }
  }
  return children;
}

// Vertices of the rectangularized conditional set on `cell`, a cell of
// stage `t`, expressed over the cell's states.
std::vector<Vector> RectangularOnCell(const CredalSet& c, const Filtration& f,
                                      const Cell& cell, int t) {
  if (cell.size() == 1) return {Vector{Rational(1)}};
  std::vector<Vector> conditionals;
  for (const auto& v : c.vertices()) {
    if (CellMass(v, cell) == 0) {
      throw ZeroProbabilityReach(
          "prior " + ToString(v) + " gives cell " + CellName(c.space(), cell) +
              " probability 0 while others do not; its conditional set is "
              "undefined",
          ToStrings(v));
    }
    conditionals.push_back(ConditionPrior(v, cell));
  }
  const int k = static_cast<int>(cell.size());
  conditionals =
      MinimizePolytope(Polytope(k, std::move(conditionals))).vertices();

  const Partition children = ChildrenOf(f, cell, t);
  // Position of each state inside `cell`.
  auto position = [&](int state) {
    return static_cast<int>(std::lower_bound(cell.begin(), cell.end(), state) -
                            cell.begin());
  };

  // One-step-ahead marginals of the conditional set.
  std::vector<Vector> marginals;
  for (const auto& q : conditionals) {
    Vector m;
    for (const auto& child : children) {
      Rational mass = 0;
      for (int s : child) mass += q[position(s)];
      m.push_back(mass);
    }
    marginals.push_back(std::move(m));
  }
  marginals = MinimizePolytope(
                  Polytope(static_cast<int>(children.size()), marginals))
                  .vertices();

  // Rectangularized conditionals of each child that carries mass somewhere.
  std::vector<int> live;
  std::vector<std::vector<Vector>> child_sets;
  for (size_t j = 0; j < children.size(); ++j) {
    bool any = false;
    for (const auto& m : marginals) any = any || m[j] != 0;
    if (!any) continue;
    live.push_back(static_cast<int>(j));
    child_sets.push_back(RectangularOnCell(c, f, children[j], t + 1));
  }

  std::vector<Vector> composed;
  std::vector<size_t> choice(live.size(), 0);
  for (const auto& m : marginals) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      Vector p(k);
      for (size_t l = 0; l < live.size(); ++l) {
        const Cell& child = children[live[l]];
        const Vector& q = child_sets[l][choice[l]];
        for (size_t i = 0; i < child.size(); ++i) {
          p[position(child[i])] = m[live[l]] * q[i];
        }
      }
      composed.push_back(std::move(p));
      size_t l = live.size();
      while (l > 0 && ++choice[l - 1] == child_sets[l - 1].size()) {
        choice[--l] = 0;
      }
      if (l == 0) break;
    }
  }
  return MinimizePolytope(Polytope(k, std::move(composed))).vertices();
}

}  // namespace

StateSpace::StateSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidArgument("state space is empty");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() !=
      labels_.size()) {
    throw InvalidArgument("state labels must be unique");
  }
}

int StateSpace::IndexOf(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw InvalidArgument("unknown state '" + label + "'");
  }
  return static_cast<int>(it - labels_.begin());
}

CredalSet::CredalSet(StateSpace space, const Polytope& set)
    : CredalSet(std::move(space), set.vertices()) {}

CredalSet::CredalSet(StateSpace space, std::vector<Vector> vertices)
    : space_(std::move(space)),
      set_(CheckedPolytope(space_, std::move(vertices))) {}

bool CredalSet::Contains(const Vector& prior) const {
  return PolytopeContains(set_, prior);
}

bool CredalSetsEqual(const CredalSet& a, const CredalSet& b) {
  return a.space() == b.space() && PolytopesEqual(a.polytope(), b.polytope());
}

Filtration::Filtration(StateSpace space, std::vector<Partition> stages)
    : space_(std::move(space)), stages_(std::move(stages)) {
  const int n = space_.size();
  // Cell index of each state in the previous stage.
  std::vector<int> previous(n, 0);
  for (size_t t = 0; t < stages_.size(); ++t) {
    std::vector<int> owner(n, -1);
    for (size_t c = 0; c < stages_[t].size(); ++c) {
      Cell& cell = stages_[t][c];
      if (cell.empty()) {
        throw InvalidArgument("stage " + std::to_string(t + 1) +
                              " has an empty cell");
      }
      std::sort(cell.begin(), cell.end());
      for (int s : cell) {
        if (s < 0 || s >= n || owner[s] >= 0) {
          throw InvalidArgument("stage " + std::to_string(t + 1) +
                                " is not a partition of the states");
        }
        owner[s] = static_cast<int>(c);
      }
      for (int s : cell) {
        if (previous[s] != previous[cell.front()]) {
          throw InvalidArgument("stage " + std::to_string(t + 1) +
                                " does not refine the previous stage");
        }
      }
    }
    if (std::count(owner.begin(), owner.end(), -1) > 0) {
      throw InvalidArgument("stage " + std::to_string(t + 1) +
                            " does not cover every state");
    }
    previous = std::move(owner);
  }
}

Filtration Filtration::FromLabels(
    StateSpace space,
    const std::vector<std::vector<std::vector<std::string>>>& stages) {
  std::vector<Partition> partitions;
  for (const auto& stage : stages) {
    Partition p;
    for (const auto& cell : stage) {
      Cell c;
      for (const auto& label : cell) c.push_back(space.IndexOf(label));
      p.push_back(std::move(c));
    }
    partitions.push_back(std::move(p));
  }
  return Filtration(std::move(space), std::move(partitions));
}

std::string CellName(const StateSpace& space, const Cell& cell) {
  std::string out = "{";
  for (size_t i = 0; i < cell.size(); ++i) {
    if (i > 0) out += ",";
    out += space.label(cell[i]);
  }
  return out + "}";
}

CredalSet EpsContamination(const StateSpace& space, const Vector& center,
                           const Rational& eps) {
  if (eps < 0 || eps > 1) {
    throw InvalidArgument("contamination level " + ToString(eps) +
                          " outside [0, 1]");
  }
  if (static_cast<int>(center.size()) != space.size() ||
      !IsProbabilityVector(center)) {
    throw InvalidArgument("contamination center " + ToString(center) +
                          " is not a distribution over the states");
  }
  std::vector<Vector> vertices;
  for (int s = 0; s < space.size(); ++s) {
    Vector v = Scale(1 - eps, center);
    v[s] += eps;
    vertices.push_back(std::move(v));
  }
  return CredalSet(space, std::move(vertices));
}

Rational CellMass(const Vector& prior, const Cell& cell) {
  Rational mass = 0;
  for (int s : cell) mass += prior.at(s);
  return mass;
}

Vector ConditionPrior(const Vector& prior, const Cell& event) {
  const Rational mass = CellMass(prior, event);
  if (mass == 0) {
    throw ZeroProbabilityReach(
        "prior " + ToString(prior) + " gives the event probability 0",
        ToStrings(prior));
  }
  Vector out;
  out.reserve(event.size());
  for (int s : event) out.push_back(prior[s] / mass);
  return out;
}

CredalSet FullBayesUpdate(const CredalSet& c, const Cell& event) {
  Cell sorted = event;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("event must be a nonempty set of states");
  }
  std::vector<std::string> labels;
  for (int s : sorted) {
    if (s < 0 || s >= c.space().size()) {
      throw InvalidArgument("event names a state outside the space");
    }
    labels.push_back(c.space().label(s));
  }
  std::vector<Vector> posteriors;
  for (const auto& v : c.vertices()) {
    if (CellMass(v, sorted) == 0) {
      throw ZeroProbabilityReach("prior " + ToString(v) + " gives event " +
                                     CellName(c.space(), sorted) +
                                     " probability 0",
                                 ToStrings(v));
    }
    posteriors.push_back(ConditionPrior(v, sorted));
  }
  return CredalSet(StateSpace(std::move(labels)), std::move(posteriors));
}

CredalSet OneStepAhead(const CredalSet& c, const Partition& partition) {
  std::vector<std::string> labels;
  std::vector<int> covered(c.space().size(), 0);
  for (const auto& cell : partition) {
    labels.push_back(CellName(c.space(), cell));
    for (int s : cell) ++covered.at(s);
  }
  if (std::count(covered.begin(), covered.end(), 1) !=
      static_cast<long>(covered.size())) {
    throw InvalidArgument("cells do not partition the state space");
  }
  std::vector<Vector> marginals;
  for (const auto& v : c.vertices()) {
    Vector m;
    for (const auto& cell : partition) m.push_back(CellMass(v, cell));
    marginals.push_back(std::move(m));
  }
  return CredalSet(StateSpace(std::move(labels)), std::move(marginals));
}

CredalSet RectangularHull(const CredalSet& c, const Filtration& f) {
  if (!(c.space() == f.space())) {
    throw InvalidArgument("filtration is over a different state space");
  }
  Cell whole(c.space().size());
  for (int s = 0; s < c.space().size(); ++s) whole[s] = s;
  return CredalSet(c.space(), RectangularOnCell(c, f, whole, 0));
}

RectangularityResult CheckRectangular(const CredalSet& c, const Filtration& f) {
  const CredalSet hull = RectangularHull(c, f);
  for (const auto& v : hull.vertices()) {
    if (!c.Contains(v)) return {false, v};
  }
  return {true, std::nullopt};
}

}  // namespace ambigame
