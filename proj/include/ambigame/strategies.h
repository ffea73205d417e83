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

#ifndef AMBIGAME_STRATEGIES_H_
#define AMBIGAME_STRATEGIES_H_

#include <variant>
#include <vector>

#include "ambigame/game_tree.h"
#include "ambigame/rational.h"

namespace ambigame {

// One local distribution per information set of `player`, in the order of
// GameTree::PlayerInformationSets.
struct BehavioralStrategy {
  int player = -1;
  std::vector<Vector> locals;
};

// Distribution over the player's pure strategies in canonical order.
struct MixedStrategy {
  int player = -1;
  Vector weights;
};

using PlayerStrategy = std::variant<MixedStrategy, BehavioralStrategy>;

// Probability of each terminal, indexed by terminal ordinal.
using OutcomeDistribution = Vector;

// Throw InvalidArgument if the strategy does not fit the game or is not a
// distribution.
void ValidateStrategy(const GameTree& game, const BehavioralStrategy& s);
void ValidateStrategy(const GameTree& game, const MixedStrategy& s);

BehavioralStrategy PureBehavioralStrategy(const GameTree& game, int player,
                                          int pure_index);
MixedStrategy PureMixedStrategy(const GameTree& game, int player,
                                int pure_index);
BehavioralStrategy UniformBehavioralStrategy(const GameTree& game, int player);

// Reach probability of each terminal: the product of the local action
// probabilities along its path. `profile` holds one strategy per player, in
// player order.
OutcomeDistribution ComputeOutcomeDistribution(
    const GameTree& game, const std::vector<BehavioralStrategy>& profile);

// Kuhn's construction: the local probability of an action is the mixed
// weight of pure strategies that reach the information set and choose the
// action, divided by the weight of those that reach it. Information sets the
// mixed strategy never reaches get the uniform distribution. Throws
// PerfectRecallViolation if the player lacks perfect recall.
BehavioralStrategy MixedToBehavioral(const GameTree& game,
                                     const MixedStrategy& mixed);

// Product-of-locals construction.
MixedStrategy BehavioralToMixed(const GameTree& game,
                                const BehavioralStrategy& behavioral);

// Outcome distribution when `player` uses `strategy` and every opponent
// plays the pure strategy given in `opponent_pure` (indexed by player; the
// entry for `player` is ignored).
OutcomeDistribution OutcomeAgainstPure(const GameTree& game, int player,
                                       const PlayerStrategy& strategy,
                                       const std::vector<int>& opponent_pure);

// True iff both strategies induce the same terminal distribution against
// every opponent pure-strategy profile.
bool OutcomeEquivalent(const GameTree& game, int player,
                       const PlayerStrategy& a, const PlayerStrategy& b);

}  // namespace ambigame

#endif  // AMBIGAME_STRATEGIES_H_
