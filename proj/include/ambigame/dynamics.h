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

#ifndef AMBIGAME_DYNAMICS_H_
#define AMBIGAME_DYNAMICS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ambigame/beliefs.h"
#include "ambigame/game_tree.h"
#include "ambigame/maxmin.h"

namespace ambigame {

// Names a coarse state made of several canonical states, e.g.
// {"Z", {"LM", "LN", "RM"}}.
using StateGroups = std::map<std::string, std::vector<std::string>>;

// A stage-1 cell of the player's filtration.
struct InformationCell {
  Cell states;
  // Own information sets reachable when the state lies in this cell; empty
  // if the player does not move there.
  std::vector<int> information_sets;
  // Ex-ante payoff matrix restricted to the cell's columns.
  Matrix payoff;

  bool acts() const { return !information_sets.empty(); }
};

// One player's view of a game as a dynamic decision problem. States are
// classes of opponent pure-strategy profiles that fix the terminal reached
// for every own pure strategy; the player's strategy ranges over mixtures of
// own pure strategies.
struct PlayerProblem {
  int player = -1;
  DecisionProblem exante;
  Filtration filtration;
  std::vector<InformationCell> cells;  // Matches filtration stage 1.
};

// Canonical states of `player`'s problem in `game`: one per class of
// opponent pure profiles with identical outcomes, labelled by the opponent
// actions taken along the way ("LM", "RN", "O").
std::vector<std::string> CanonicalStates(const GameTree& game, int player);

// Builds the ex-ante problem and stage-1 filtration for `player`.
//
// `beliefs` must be stated over canonical state labels, or over names from
// `groups` standing for several canonical states; each canonical state must
// be covered exactly once. Throws PerfectRecallViolation, UnboundParameter,
// or StateSpaceMismatch (unknown or missing states, or a group whose
// members differ in payoffs or in the information sets they reach).
PlayerProblem BuildPlayerProblem(const GameTree& game, int player,
                                 const CredalSet& beliefs,
                                 const Bindings& bindings = {},
                                 const StateGroups& groups = {});

// The decision problem at an acting cell: restricted payoffs and the full
// Bayesian update of the ex-ante beliefs. Throws ZeroProbabilityReach if
// some prior gives the cell probability zero.
DecisionProblem ConditionalProblem(const PlayerProblem& pp, int cell_index);

// Merges states that lie in the same stage-1 cell and have identical payoff
// columns. Merged states are named by `names` (keyed by the member labels in
// state order) or by joining the member labels with '+'.
PlayerProblem AggregateIdenticalPayoffStates(
    const PlayerProblem& pp,
    const std::map<std::vector<std::string>, std::string>& names = {});

// Prior over (Z, RN, O) induced by a prior (l, r, o) over player 1's moves
// and an independent probability n of N: (l + r(1-n), r n, o).
Vector InducedPrior(const Vector& lro, const Rational& n);

// Hull of the induced priors over all upstream priors and all n in
// [n_low, n_high]. For fixed n the map is affine in (l, r, o), and for fixed
// (l, r, o) it is affine in n, so the images of the upstream vertices at the
// two interval endpoints span every induced prior.
CredalSet InduceDownstream(const CredalSet& upstream, const Rational& n_low,
                           const Rational& n_high,
                           std::vector<std::string> labels = {"Z", "RN", "O"});

enum class Verdict { kConsistent, kInconsistent, kUnreachable };

std::string VerdictName(Verdict v);

struct CellVerdict {
  int cell_index = -1;
  std::string cell_name;
  Verdict verdict = Verdict::kUnreachable;
  // Judged cells only.
  std::optional<MaxminSolution> conditional;  // Unrestricted conditional optimum.
  std::optional<MaxminSolution> restricted;   // Conditional optimum over the ex-ante face.
  std::optional<Rational> value_gap;          // conditional - restricted value.
  std::string note;                           // Why a cell is unreachable.
};

struct ConsistencyReport {
  MaxminSolution exante;
  std::vector<CellVerdict> cells;  // Acting cells only.
  bool consistent = true;
};

// Judges every acting cell: consistent iff some ex-ante optimal strategy is
// also optimal for the conditional problem, i.e. the conditional maxmin
// value over the ex-ante optimal face equals the unrestricted conditional
// value. Cells some prior deems unreachable are reported, not judged.
ConsistencyReport CheckDynamicConsistency(const PlayerProblem& pp);

struct PayoffViolation {
  Bindings payoffs;  // The slot assignment that was found.
  ConsistencyReport report;
  long assignments_checked = 0;
};

struct PayoffSearch {
  std::optional<PayoffViolation> violation;
  long assignments_checked = 0;
};

// Scans every assignment of `grid` values to `slots`, lexicographically with
// the first slot most significant, and returns the first one whose report
// is inconsistent. `base` supplies the remaining bindings.
PayoffSearch FindDcViolationPayoffs(const GameTree& game, int player,
                                    const CredalSet& beliefs,
                                    const std::vector<Rational>& grid,
                                    const std::vector<std::string>& slots,
                                    const Bindings& base = {},
                                    const StateGroups& groups = {});

}  // namespace ambigame

#endif  // AMBIGAME_DYNAMICS_H_
