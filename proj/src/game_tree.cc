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

#include "ambigame/game_tree.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "ambigame/errors.h"

namespace ambigame {
namespace {

bool IsIdentifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string JoinPath(const NodePath& path) {
  std::string out;
  for (const auto& label : path) {
    if (!out.empty()) out += ' ';
    out += label;
  }
  return out.empty() ? "root" : out;
}

}  // namespace

GameTree::GameTree(std::vector<std::string> players, const NodeSpec& root,
                   const std::vector<std::vector<NodePath>>& information_sets,
                   Bindings parameters)
    : players_(std::move(players)), parameters_(std::move(parameters)) {
  if (players_.empty()) throw MalformedGame("game has no players");
  if (std::set<std::string>(players_.begin(), players_.end()).size() !=
      players_.size()) {
    throw MalformedGame("duplicate player identifiers");
  }
  AddNode(root, -1, -1);

  // Group the listed nodes; everything else is a singleton.
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(nodes_.size(), -1);
  for (size_t g = 0; g < information_sets.size(); ++g) {
    if (information_sets[g].empty()) {
      throw MalformedGame("information set " + std::to_string(g) + " is empty");
    }
    std::vector<int> members;
    for (const auto& path : information_sets[g]) {
      auto id = FindNode(path);
      if (!id) {
        throw MalformedGame("information set " + std::to_string(g) +
                            ": no node at path '" + JoinPath(path) + "'");
      }
      if (nodes_[*id].is_terminal()) {
        throw MalformedGame("information set " + std::to_string(g) +
                            ": node '" + JoinPath(path) + "' is terminal");
      }
      if (group_of[*id] >= 0) {
        throw MalformedGame("node '" + JoinPath(path) +
                            "' listed in more than one information set");
      }
      group_of[*id] = static_cast<int>(groups.size());
      members.push_back(*id);
    }
    groups.push_back(std::move(members));
  }
  for (int id = 0; id < num_nodes(); ++id) {
    if (!nodes_[id].is_terminal() && group_of[id] < 0) {
      group_of[id] = static_cast<int>(groups.size());
      groups.push_back({id});
    }
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  player_information_sets_.assign(players_.size(), {});
  for (auto& members : groups) {
    const int id = static_cast<int>(information_sets_.size());
    const Node& first = nodes_[members.front()];
    InformationSet info{first.player, members, first.actions};
    for (int n : members) {
      if (nodes_[n].player != first.player) {
        throw MalformedGame("information set containing '" +
                            NodeName(members.front()) +
                            "' mixes nodes of different players");
      }
      if (nodes_[n].actions != first.actions) {
        throw MalformedGame("information set containing '" +
                            NodeName(members.front()) +
                            "' has nodes with different action lists");
      }
      nodes_[n].information_set = id;
    }
    local_index_.push_back(
        static_cast<int>(player_information_sets_[first.player].size()));
    player_information_sets_[first.player].push_back(id);
    information_sets_.push_back(std::move(info));
  }
}

int GameTree::AddNode(const NodeSpec& spec, int parent, int incoming_action) {
  const int id = num_nodes();
  nodes_.push_back(Node{});
  nodes_[id].parent = parent;
  nodes_[id].incoming_action = incoming_action;
  const std::string where = parent < 0 ? "root" : NodeName(id);
  if (spec.player.empty()) {
    if (!spec.actions.empty()) {
      throw MalformedGame("node '" + where + "' has actions but no player");
    }
    if (spec.payoffs.size() != players_.size()) {
      throw MalformedGame("terminal '" + where + "' has " +
                          std::to_string(spec.payoffs.size()) +
                          " payoffs, expected " +
                          std::to_string(players_.size()));
    }
    std::vector<PayoffTerm> payoffs;
    for (const auto& text : spec.payoffs) {
      if (auto value = TryParseRational(text)) {
        payoffs.push_back({std::nullopt, *value});
      } else if (IsIdentifier(text)) {
        payoffs.push_back({text, Rational(0)});
      } else {
        throw MalformedGame("terminal '" + where + "': payoff '" + text +
                            "' is neither a rational nor a parameter name");
      }
    }
    nodes_[id].payoffs = std::move(payoffs);
    nodes_[id].terminal_index = static_cast<int>(terminals_.size());
    terminals_.push_back(id);
    return id;
  }
  auto it = std::find(players_.begin(), players_.end(), spec.player);
  if (it == players_.end()) {
    throw MalformedGame("node '" + where + "' names unknown player '" +
                        spec.player + "'");
  }
  if (spec.actions.empty()) {
    throw MalformedGame("decision node '" + where + "' has no actions");
  }
  nodes_[id].player = static_cast<int>(it - players_.begin());
  std::set<std::string> seen;
  for (const auto& a : spec.actions) {
    if (a.label.empty() || !seen.insert(a.label).second) {
      throw MalformedGame("decision node '" + where +
                          "' has an empty or duplicate action label");
    }
    nodes_[id].actions.push_back(a.label);
  }
  for (size_t a = 0; a < spec.actions.size(); ++a) {
    const int child = AddNode(spec.actions[a].child, id, static_cast<int>(a));
    nodes_[id].children.push_back(child);
  }
  return id;
}

int GameTree::PlayerIndex(const std::string& name) const {
  auto it = std::find(players_.begin(), players_.end(), name);
  if (it == players_.end()) {
    throw InvalidArgument("unknown player '" + name + "'");
  }
  return static_cast<int>(it - players_.begin());
}

NodePath GameTree::PathOf(int node) const {
  NodePath path;
  for (int n = node; nodes_[n].parent >= 0; n = nodes_[n].parent) {
    path.push_back(nodes_[nodes_[n].parent].actions[nodes_[n].incoming_action]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::string GameTree::NodeName(int node) const { return JoinPath(PathOf(node)); }

std::optional<int> GameTree::FindNode(const NodePath& path) const {
  int n = 0;
  for (const auto& label : path) {
    const Node& cur = nodes_[n];
    auto it = std::find(cur.actions.begin(), cur.actions.end(), label);
    if (it == cur.actions.end()) return std::nullopt;
    n = cur.children[it - cur.actions.begin()];
  }
  return n;
}

int GameTree::NumPureStrategies(int player) const {
  int count = 1;
  for (int info : player_information_sets_[player]) {
    count *= static_cast<int>(information_sets_[info].actions.size());
  }
  return count;
}

std::vector<int> GameTree::PureStrategy(int player, int index) const {
  const auto& infos = player_information_sets_[player];
  std::vector<int> actions(infos.size());
  for (int k = static_cast<int>(infos.size()) - 1; k >= 0; --k) {
    const int n = static_cast<int>(information_sets_[infos[k]].actions.size());
    actions[k] = index % n;
    index /= n;
  }
  return actions;
}

int GameTree::PureStrategyIndex(int player,
                                const std::vector<int>& actions) const {
  const auto& infos = player_information_sets_[player];
  int index = 0;
  for (size_t k = 0; k < infos.size(); ++k) {
    index = index * static_cast<int>(information_sets_[infos[k]].actions.size()) +
            actions[k];
  }
  return index;
}

std::string GameTree::PureStrategyName(int player, int index) const {
  const auto& infos = player_information_sets_[player];
  if (infos.empty()) return "-";
  const auto actions = PureStrategy(player, index);
  std::string out;
  for (size_t k = 0; k < infos.size(); ++k) {
    out += information_sets_[infos[k]].actions[actions[k]];
  }
  return out;
}

std::vector<std::pair<int, int>> GameTree::OwnHistory(int player,
                                                      int node) const {
  std::vector<std::pair<int, int>> history;
  for (int n = node; nodes_[n].parent >= 0; n = nodes_[n].parent) {
    const Node& parent = nodes_[nodes_[n].parent];
    if (parent.player == player) {
      history.emplace_back(parent.information_set, nodes_[n].incoming_action);
    }
  }
  std::reverse(history.begin(), history.end());
  return history;
}

std::vector<std::string> GameTree::ParameterNames() const {
  std::set<std::string> names;
  for (const auto& [name, value] : parameters_) names.insert(name);
  for (int t : terminals_) {
    for (const auto& term : nodes_[t].payoffs) {
      if (term.parameter) names.insert(*term.parameter);
    }
  }
  return {names.begin(), names.end()};
}

Matrix GameTree::ResolvePayoffs(const Bindings& bindings) const {
  Matrix out;
  out.reserve(terminals_.size());
  for (int t : terminals_) {
    Vector row;
    for (const auto& term : nodes_[t].payoffs) {
      if (!term.parameter) {
        row.push_back(term.constant);
      } else if (auto b = bindings.find(*term.parameter); b != bindings.end()) {
        row.push_back(b->second);
      } else if (auto p = parameters_.find(*term.parameter);
                 p != parameters_.end()) {
        row.push_back(p->second);
      } else {
        throw UnboundParameter(*term.parameter);
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::optional<RecallViolation> FindPerfectRecallViolation(const GameTree& game,
                                                          int player) {
  for (int info : game.PlayerInformationSets(player)) {
    const auto& members = game.information_sets()[info].nodes;
    const auto reference = game.OwnHistory(player, members.front());
    for (size_t i = 1; i < members.size(); ++i) {
      if (game.OwnHistory(player, members[i]) != reference) {
        return RecallViolation{
            player, members.front(), members[i],
            "player " + game.players()[player] + " cannot tell '" +
                game.NodeName(members.front()) + "' from '" +
                game.NodeName(members[i]) +
                "' but reached them through different own moves"};
      }
    }
  }
  return std::nullopt;
}

std::optional<RecallViolation> FindPerfectRecallViolation(
    const GameTree& game) {
  for (int p = 0; p < game.num_players(); ++p) {
    if (auto v = FindPerfectRecallViolation(game, p)) return v;
  }
  return std::nullopt;
}

}  // namespace ambigame
