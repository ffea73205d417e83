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

#include "ambigame/strategies.h"

#include <string>
#include <utility>

#include "ambigame/errors.h"

namespace ambigame {
namespace {

void CheckPlayer(const GameTree& game, int player) {
  if (player < 0 || player >= game.num_players()) {
    throw InvalidArgument("strategy names player index " +
                          std::to_string(player) + " outside the game");
  }
}

// Whether `pure` (one action per local information set) is consistent with
// every own move in `history`.
bool Consistent(const GameTree& game, const std::vector<int>& pure,
                const std::vector<std::pair<int, int>>& history) {
  for (const auto& [info, action] : history) {
    if (pure[game.LocalIndex(info)] != action) return false;
  }
  return true;
}

}  // namespace

void ValidateStrategy(const GameTree& game, const BehavioralStrategy& s) {
  CheckPlayer(game, s.player);
  const auto& infos = game.PlayerInformationSets(s.player);
  if (s.locals.size() != infos.size()) {
    throw InvalidArgument("behavioral strategy for player " +
                          game.players()[s.player] + " covers " +
                          std::to_string(s.locals.size()) + " of " +
                          std::to_string(infos.size()) + " information sets");
  }
  for (size_t k = 0; k < infos.size(); ++k) {
    const auto& actions = game.information_sets()[infos[k]].actions;
    if (s.locals[k].size() != actions.size() ||
        !IsProbabilityVector(s.locals[k])) {
      throw InvalidArgument("local strategy " + std::to_string(k) +
                            " of player " + game.players()[s.player] +
                            " is not a distribution over its " +
                            std::to_string(actions.size()) + " actions");
    }
  }
}

void ValidateStrategy(const GameTree& game, const MixedStrategy& s) {
  CheckPlayer(game, s.player);
  const int n = game.NumPureStrategies(s.player);
  if (static_cast<int>(s.weights.size()) != n ||
      !IsProbabilityVector(s.weights)) {
    throw InvalidArgument("mixed strategy for player " +
                          game.players()[s.player] +
                          " is not a distribution over its " +
                          std::to_string(n) + " pure strategies");
  }
}

BehavioralStrategy PureBehavioralStrategy(const GameTree& game, int player,
                                          int pure_index) {
  CheckPlayer(game, player);
  const auto actions = game.PureStrategy(player, pure_index);
  BehavioralStrategy s{player, {}};
  const auto& infos = game.PlayerInformationSets(player);
  for (size_t k = 0; k < infos.size(); ++k) {
    Vector local(game.information_sets()[infos[k]].actions.size());
    local[actions[k]] = 1;
    s.locals.push_back(std::move(local));
  }
  return s;
}

MixedStrategy PureMixedStrategy(const GameTree& game, int player,
                                int pure_index) {
  CheckPlayer(game, player);
  MixedStrategy s{player, Vector(game.NumPureStrategies(player))};
  s.weights[pure_index] = 1;
  return s;
}

BehavioralStrategy UniformBehavioralStrategy(const GameTree& game,
                                             int player) {
  CheckPlayer(game, player);
  BehavioralStrategy s{player, {}};
  for (int info : game.PlayerInformationSets(player)) {
    const auto n = game.information_sets()[info].actions.size();
    s.locals.emplace_back(n, Rational(1, static_cast<long>(n)));
  }
  return s;
}

OutcomeDistribution ComputeOutcomeDistribution(
    const GameTree& game, const std::vector<BehavioralStrategy>& profile) {
  if (static_cast<int>(profile.size()) != game.num_players()) {
    throw InvalidArgument("profile must hold one strategy per player");
  }
  for (int p = 0; p < game.num_players(); ++p) {
    if (profile[p].player != p) {
      throw InvalidArgument("profile entry " + std::to_string(p) +
                            " is a strategy for another player");
    }
    ValidateStrategy(game, profile[p]);
  }
  OutcomeDistribution dist(game.num_terminals());
  // Depth-first walk carrying the reach probability.
  std::vector<std::pair<int, Rational>> stack{{0, Rational(1)}};
  while (!stack.empty()) {
    auto [id, reach] = std::move(stack.back());
    stack.pop_back();
    const auto& node = game.node(id);
    if (node.is_terminal()) {
      dist[node.terminal_index] = reach;
      continue;
    }
    const Vector& local =
        profile[node.player].locals[game.LocalIndex(node.information_set)];
    for (size_t a = 0; a < node.children.size(); ++a) {
      stack.emplace_back(node.children[a], reach * local[a]);
    }
  }
  return dist;
}

BehavioralStrategy MixedToBehavioral(const GameTree& game,
                                     const MixedStrategy& mixed) {
  ValidateStrategy(game, mixed);
  const int player = mixed.player;
  if (auto v = FindPerfectRecallViolation(game, player)) {
    throw PerfectRecallViolation(v->message);
  }
  const int num_pure = game.NumPureStrategies(player);
  std::vector<std::vector<int>> pures(num_pure);
  for (int i = 0; i < num_pure; ++i) pures[i] = game.PureStrategy(player, i);

  BehavioralStrategy out{player, {}};
  const auto& infos = game.PlayerInformationSets(player);
  for (size_t k = 0; k < infos.size(); ++k) {
    const auto& info = game.information_sets()[infos[k]];
    // Under perfect recall every member shares this history.
    const auto history = game.OwnHistory(player, info.nodes.front());
    Vector local(info.actions.size());
    Rational reach = 0;
    for (int i = 0; i < num_pure; ++i) {
      if (mixed.weights[i] == 0 || !Consistent(game, pures[i], history)) {
        continue;
      }
      reach += mixed.weights[i];
      local[pures[i][k]] += mixed.weights[i];
    }
    if (reach == 0) {
      local.assign(info.actions.size(),
                   Rational(1, static_cast<long>(info.actions.size())));
    } else {
      for (auto& x : local) x /= reach;
    }
    out.locals.push_back(std::move(local));
  }
  return out;
}

MixedStrategy BehavioralToMixed(const GameTree& game,
                                const BehavioralStrategy& behavioral) {
  ValidateStrategy(game, behavioral);
  const int player = behavioral.player;
  MixedStrategy out{player, Vector(game.NumPureStrategies(player))};
  for (int i = 0; i < game.NumPureStrategies(player); ++i) {
    const auto actions = game.PureStrategy(player, i);
    Rational w = 1;
    for (size_t k = 0; k < actions.size() && w != 0; ++k) {
      w *= behavioral.locals[k][actions[k]];
    }
    out.weights[i] = w;
  }
  return out;
}

OutcomeDistribution OutcomeAgainstPure(const GameTree& game, int player,
                                       const PlayerStrategy& strategy,
                                       const std::vector<int>& opponent_pure) {
  std::vector<BehavioralStrategy> profile;
  for (int p = 0; p < game.num_players(); ++p) {
    profile.push_back(p == player ? BehavioralStrategy{p, {}}
                                  : PureBehavioralStrategy(game, p, opponent_pure[p]));
  }
  if (const auto* beh = std::get_if<BehavioralStrategy>(&strategy)) {
    if (beh->player != player) {
      throw InvalidArgument("strategy belongs to another player");
    }
    profile[player] = *beh;
    return ComputeOutcomeDistribution(game, profile);
  }
  const auto& mixed = std::get<MixedStrategy>(strategy);
  if (mixed.player != player) {
    throw InvalidArgument("strategy belongs to another player");
  }
  ValidateStrategy(game, mixed);
  OutcomeDistribution dist(game.num_terminals());
  for (int i = 0; i < game.NumPureStrategies(player); ++i) {
    if (mixed.weights[i] == 0) continue;
    profile[player] = PureBehavioralStrategy(game, player, i);
    dist = Add(dist, Scale(mixed.weights[i],
                           ComputeOutcomeDistribution(game, profile)));
  }
  return dist;
}

bool OutcomeEquivalent(const GameTree& game, int player,
                       const PlayerStrategy& a, const PlayerStrategy& b) {
  std::vector<int> counts(game.num_players(), 1);
  for (int p = 0; p < game.num_players(); ++p) {
    if (p != player) counts[p] = game.NumPureStrategies(p);
  }
  std::vector<int> profile(game.num_players(), 0);
  while (true) {
    if (OutcomeAgainstPure(game, player, a, profile) !=
        OutcomeAgainstPure(game, player, b, profile)) {
      return false;
    }
    int p = game.num_players() - 1;
    while (p >= 0 && ++profile[p] == counts[p]) profile[p--] = 0;
    if (p < 0) return true;
  }
}

}  // namespace ambigame
