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

#ifndef AMBIGAME_GAME_TREE_H_
#define AMBIGAME_GAME_TREE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ambigame/rational.h"

namespace ambigame {

// Sequence of action labels from the root; the root itself is {}.
using NodePath = std::vector<std::string>;

// Parameter name -> value, used to fill symbolic payoff slots.
using Bindings = std::map<std::string, Rational>;

struct ActionSpec;

// Recursive description of a game tree, as read from JSON. A node with a
// nonempty `player` is a decision node; otherwise it is terminal and
// `payoffs` holds one entry per player, each either a rational literal
// ("-1", "1/2") or the name of a payoff parameter ("x").
struct NodeSpec {
  std::string player;
  std::vector<ActionSpec> actions;
  std::vector<std::string> payoffs;
};

struct ActionSpec {
  std::string label;
  NodeSpec child;
};

// Finite extensive-form game without chance moves.
//
// Nodes are numbered in preorder (root = 0). Information sets are numbered
// by the preorder position of their first node; decision nodes not listed
// in any information set become singleton sets. Terminals are likewise kept
// in preorder, and OutcomeDistribution coordinates follow that order.
class GameTree {
 public:
  struct PayoffTerm {
    std::optional<std::string> parameter;
    Rational constant;
  };

  struct Node {
    int parent = -1;
    int incoming_action = -1;  // Index into the parent's action list.
    int player = -1;           // -1 for terminals.
    std::vector<std::string> actions;
    std::vector<int> children;
    int information_set = -1;
    int terminal_index = -1;
    std::vector<PayoffTerm> payoffs;

    bool is_terminal() const { return player < 0; }
  };

  struct InformationSet {
    int player = -1;
    std::vector<int> nodes;
    std::vector<std::string> actions;
  };

  // Throws MalformedGame on any structural problem: unknown players, empty
  // action lists, duplicate labels, information-set paths that do not name
  // decision nodes, mixed players or action lists inside one information
  // set, or payoff vectors of the wrong length.
  GameTree(std::vector<std::string> players, const NodeSpec& root,
           const std::vector<std::vector<NodePath>>& information_sets,
           Bindings parameters = {});

  const std::vector<std::string>& players() const { return players_; }
  int num_players() const { return static_cast<int>(players_.size()); }
  // Throws InvalidArgument for unknown names.
  int PlayerIndex(const std::string& name) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int id) const { return nodes_[id]; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }

  const std::vector<InformationSet>& information_sets() const {
    return information_sets_;
  }
  // Information sets of `player`, in increasing global order.
  const std::vector<int>& PlayerInformationSets(int player) const {
    return player_information_sets_[player];
  }
  // Position of `information_set` within its player's list.
  int LocalIndex(int information_set) const {
    return local_index_[information_set];
  }

  // Terminal node ids in preorder.
  const std::vector<int>& terminals() const { return terminals_; }
  int num_terminals() const { return static_cast<int>(terminals_.size()); }

  NodePath PathOf(int node) const;
  // Path labels joined by spaces; "root" for the root.
  std::string NodeName(int node) const;
  std::optional<int> FindNode(const NodePath& path) const;

  // Pure strategies pick one action index per information set of the
  // player. They are enumerated lexicographically with the player's first
  // information set most significant.
  int NumPureStrategies(int player) const;
  std::vector<int> PureStrategy(int player, int index) const;
  int PureStrategyIndex(int player, const std::vector<int>& actions) const;
  // Action labels joined, e.g. "M" or "LS"; "-" if the player never moves.
  std::string PureStrategyName(int player, int index) const;

  // Player's own (information set, action index) pairs on the path from the
  // root to `node`, excluding `node` itself.
  std::vector<std::pair<int, int>> OwnHistory(int player, int node) const;

  const Bindings& parameters() const { return parameters_; }
  std::vector<std::string> ParameterNames() const;

  // Payoff matrix indexed [terminal ordinal][player]. Bindings take
  // precedence over the game's declared parameter values. Throws
  // UnboundParameter if a slot names an unknown parameter.
  Matrix ResolvePayoffs(const Bindings& bindings = {}) const;

 private:
  int AddNode(const NodeSpec& spec, int parent, int incoming_action);

  std::vector<std::string> players_;
  std::vector<Node> nodes_;
  std::vector<InformationSet> information_sets_;
  std::vector<std::vector<int>> player_information_sets_;
  std::vector<int> local_index_;
  std::vector<int> terminals_;
  Bindings parameters_;
};

struct RecallViolation {
  int player = -1;
  int first_node = -1;
  int second_node = -1;
  std::string message;
};

// nullopt iff every player has perfect recall. Otherwise names two nodes of
// one information set whose owner reached them through different own
// histories.
std::optional<RecallViolation> FindPerfectRecallViolation(
    const GameTree& game);
// Same check restricted to one player.
std::optional<RecallViolation> FindPerfectRecallViolation(const GameTree& game,
                                                          int player);

}  // namespace ambigame

#endif  // AMBIGAME_GAME_TREE_H_
