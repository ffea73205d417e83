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

// Helpers shared by the unit and acceptance suites: literal builders,
// random generators, and oracles that deliberately avoid the library code
// paths they are used to check.

#ifndef AMBIGAME_TESTS_TEST_UTIL_H_
#define AMBIGAME_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ambigame/beliefs.h"
#include "ambigame/builtin.h"
#include "ambigame/game_tree.h"
#include "ambigame/rational.h"
#include "ambigame/strategies.h"

namespace ambigame::testing {

inline Rational Q(const std::string& s) { return ParseRational(s); }

inline Vector V(std::initializer_list<const char*> entries) {
  Vector v;
  for (const char* e : entries) v.push_back(ParseRational(e));
  return v;
}

inline bool SameVertexSet(std::vector<Vector> a, std::vector<Vector> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline Rational RandomRational(std::mt19937_64& rng, int lo, int hi,
                               int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int d = den(rng);
  std::uniform_int_distribution<int> num(lo * d, hi * d);
  return Rational(num(rng), d);
}

// Random distribution with small denominators; some coordinates may be 0.
inline Vector RandomDistribution(std::mt19937_64& rng, int n,
                                 bool allow_zeros = true) {
  std::uniform_int_distribution<int> w(allow_zeros ? 0 : 1, 6);
  Vector v(n);
  Rational total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : v) {
      x = w(rng);
      total += x;
    }
  }
  for (auto& x : v) x /= total;
  return v;
}

// ---------------------------------------------------------------------------
// Random perfect-recall game trees.

struct RandomTree {
  std::vector<std::string> players;
  NodeSpec root;
  std::vector<std::vector<NodePath>> information_sets;
};

inline RandomTree RandomPerfectRecallTree(std::mt19937_64& rng,
                                          int max_players = 3,
                                          int max_terminals = 8) {
  struct TNode {
    int parent = -1;
    int action = -1;
    int player = -1;
    int depth = 0;
    std::vector<int> children;
    int info = -1;
  };
  std::uniform_int_distribution<int> num_players_dist(1, max_players);
  const int num_players = num_players_dist(rng);
  std::vector<TNode> nodes(1);
  int leaves = 1;
  // Grow by splitting random leaves until the terminal budget is spent.
  // Mostly binary so that nodes can share information sets.
  std::discrete_distribution<int> arity_dist({0, 0, 3, 1});
  while (true) {
    std::vector<int> open;
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].children.empty() && nodes[i].depth < 4) {
        open.push_back(static_cast<int>(i));
      }
    }
    if (open.empty()) break;
    int arity = arity_dist(rng);
    if (leaves - 1 + arity > max_terminals) arity = max_terminals - leaves + 1;
    if (arity < 2) break;
    // Prefer the shallowest open leaves half of the time.
    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
      int shallow = nodes[open.front()].depth;
      for (int o : open) shallow = std::min(shallow, nodes[o].depth);
      std::erase_if(open, [&](int o) { return nodes[o].depth != shallow; });
    }
    std::uniform_int_distribution<size_t> pick(0, open.size() - 1);
    const int id = open[pick(rng)];
    std::uniform_int_distribution<int> player_dist(0, num_players - 1);
    std::uniform_int_distribution<int> coin(0, 3);
    nodes[id].player = player_dist(rng);
    // Bias toward shapes that admit shared information sets: siblings owned
    // by the same player, who did not own the parent.
    if (const int parent = nodes[id].parent; parent >= 0 && coin(rng) > 0) {
      bool copied = false;
      for (int sib : nodes[parent].children) {
        if (sib != id && !nodes[sib].children.empty()) {
          nodes[id].player = nodes[sib].player;
          copied = true;
        }
      }
      if (!copied && num_players > 1) {
        while (nodes[id].player == nodes[parent].player) {
          nodes[id].player = player_dist(rng);
        }
      }
    }
    for (int a = 0; a < arity; ++a) {
      TNode child;
      child.parent = id;
      child.action = a;
      child.depth = nodes[id].depth + 1;
      nodes[id].children.push_back(static_cast<int>(nodes.size()));
      nodes.push_back(child);
    }
    leaves += arity - 1;
    if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) break;
  }

  // Information sets: nodes may share a set only if the same player owns
  // them, they have the same number of actions and the owner's own history
  // (earlier sets and actions) agrees. Processing in creation order keeps
  // ancestors assigned first.
  struct Info {
    int player;
    size_t arity;
    std::vector<std::pair<int, int>> history;
    std::vector<int> members;
  };
  std::vector<Info> infos;
  auto history_of = [&](int id) {
    std::vector<std::pair<int, int>> h;
    const int p = nodes[id].player;
    for (int n = id; nodes[n].parent >= 0; n = nodes[n].parent) {
      const TNode& par = nodes[nodes[n].parent];
      if (par.player == p) h.emplace_back(par.info, nodes[n].action);
    }
    std::reverse(h.begin(), h.end());
    return h;
  };
  // Breadth-first order so every ancestor has its set before descendants.
  std::vector<int> order;
  for (size_t i = 0; i < nodes.size(); ++i) order.push_back(static_cast<int>(i));
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return nodes[a].depth < nodes[b].depth;
  });
  for (int id : order) {
    if (nodes[id].children.empty()) continue;
    const auto h = history_of(id);
    std::vector<int> candidates;
    for (size_t i = 0; i < infos.size(); ++i) {
      if (infos[i].player == nodes[id].player &&
          infos[i].arity == nodes[id].children.size() && infos[i].history == h) {
        candidates.push_back(static_cast<int>(i));
      }
    }
    // Join an existing compatible set two times out of three.
    size_t choice = candidates.size();
    if (!candidates.empty() &&
        std::uniform_int_distribution<int>(0, 2)(rng) > 0) {
      choice = std::uniform_int_distribution<size_t>(0, candidates.size() - 1)(rng);
    }
    if (choice < candidates.size()) {
      nodes[id].info = candidates[choice];
      infos[candidates[choice]].members.push_back(id);
    } else {
      nodes[id].info = static_cast<int>(infos.size());
      infos.push_back({nodes[id].player, nodes[id].children.size(), h, {id}});
    }
  }

  RandomTree tree;
  for (int p = 0; p < num_players; ++p) tree.players.push_back(std::to_string(p + 1));
  std::uniform_int_distribution<int> payoff(-3, 5);
  std::function<NodeSpec(int)> build = [&](int id) {
    NodeSpec spec;
    if (nodes[id].children.empty()) {
      for (int p = 0; p < num_players; ++p) {
        spec.payoffs.push_back(std::to_string(payoff(rng)));
      }
      return spec;
    }
    spec.player = tree.players[nodes[id].player];
    for (size_t a = 0; a < nodes[id].children.size(); ++a) {
      spec.actions.push_back({"a" + std::to_string(a), build(nodes[id].children[a])});
    }
    return spec;
  };
  tree.root = build(0);
  auto path_of = [&](int id) {
    NodePath path;
    for (int n = id; nodes[n].parent >= 0; n = nodes[n].parent) {
      path.push_back("a" + std::to_string(nodes[n].action));
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  for (const auto& info : infos) {
    if (info.members.size() < 2) continue;
    std::vector<NodePath> paths;
    for (int m : info.members) paths.push_back(path_of(m));
    tree.information_sets.push_back(std::move(paths));
  }
  return tree;
}

inline GameTree BuildRandomTree(const RandomTree& t) {
  return GameTree(t.players, t.root, t.information_sets);
}

inline MixedStrategy RandomMixed(std::mt19937_64& rng, const GameTree& game,
                                 int player) {
  return {player, RandomDistribution(rng, game.NumPureStrategies(player))};
}

inline BehavioralStrategy RandomBehavioral(std::mt19937_64& rng,
                                           const GameTree& game, int player) {
  BehavioralStrategy s{player, {}};
  for (int info : game.PlayerInformationSets(player)) {
    s.locals.push_back(RandomDistribution(
        rng, static_cast<int>(game.information_sets()[info].actions.size())));
  }
  return s;
}

// Oracle: terminal probabilities by explicit recursion over NodeSpec paths,
// independent of GameTree's node numbering. `prob(path, player, action)`
// supplies local probabilities. Terminals are emitted in preorder.
inline Vector PathProductOracle(
    const NodeSpec& root,
    const std::function<Rational(const NodePath&, const std::string&, int)>& prob) {
  Vector out;
  std::function<void(const NodeSpec&, NodePath&, const Rational&)> walk =
      [&](const NodeSpec& n, NodePath& path, const Rational& reach) {
        if (n.player.empty()) {
          out.push_back(reach);
          return;
        }
        for (size_t a = 0; a < n.actions.size(); ++a) {
          const Rational p = prob(path, n.player, static_cast<int>(a));
          path.push_back(n.actions[a].label);
          walk(n.actions[a].child, path, reach * p);
          path.pop_back();
        }
      };
  NodePath path;
  walk(root, path, Rational(1));
  return out;
}

// ---------------------------------------------------------------------------
// Small independent linear-algebra oracle (Cramer's rule), used to enumerate
// basic solutions without touching the library's elimination routine.

inline Rational Determinant(const Matrix& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (size_t c = 0; c < n; ++c) {
    Matrix minor;
    for (size_t r = 1; r < n; ++r) {
      Vector row;
      for (size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * Determinant(minor);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

inline std::optional<Vector> CramerSolve(const Matrix& a, const Vector& b) {
  const Rational det = Determinant(a);
  if (det == 0) return std::nullopt;
  Vector x(a.size());
  for (size_t c = 0; c < a.size(); ++c) {
    Matrix ac = a;
    for (size_t r = 0; r < a.size(); ++r) ac[r][c] = b[r];
    x[c] = Determinant(ac) / det;
  }
  return x;
}

// Every vertex of {x : rows[i] . x <= rhs[i]} for a bounded polyhedron in
// `dim` coordinates, by brute force over active sets.
inline std::vector<Vector> BruteForceVertices(const Matrix& rows,
                                              const Vector& rhs, int dim) {
  std::vector<Vector> out;
  const int m = static_cast<int>(rows.size());
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + std::min(dim, m), true);
  if (dim > m) return out;
  do {
    Matrix a;
    Vector b;
    for (int i = 0; i < m; ++i) {
      if (mask[i]) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
    }
    auto x = CramerSolve(a, b);
    if (!x) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) ok = Dot(rows[i], *x) <= rhs[i];
    if (ok) out.push_back(*x);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// ---------------------------------------------------------------------------
// The two-player example with player 2's four decision payoffs replaced by
// parameters, for randomized payoff experiments.

inline GameTree TwoPlayerGameWithFreePayoffs() {
  auto leaf = [](std::vector<std::string> p) { return NodeSpec{"", {}, std::move(p)}; };
  NodeSpec after_l{"2", {{"M", leaf({"x", "u_LM"})}, {"N", leaf({"x", "u_LN"})}}, {}};
  NodeSpec after_r{"2", {{"M", leaf({"x", "u_RM"})}, {"N", leaf({"x", "u_RN"})}}, {}};
  NodeSpec root{"1", {{"L", after_l}, {"R", after_r}, {"O", leaf({"x", "u_O"})}}, {}};
  return GameTree({"1", "2"}, root, {{{"L"}, {"R"}}}, {{"x", Rational(0)}});
}

inline std::vector<std::string> FreePayoffSlots() {
  return {"u_LM", "u_LN", "u_RM", "u_RN", "u_O"};
}

// Rectangular set over (L, R, O) built from scratch: compose every P(O)
// value with every conditional P(R | {L,R}) value.
inline CredalSet ComposeRectangular(const std::vector<Rational>& o_values,
                                    const std::vector<Rational>& delta_values) {
  std::vector<Vector> vertices;
  for (const auto& o : o_values) {
    for (const auto& d : delta_values) {
      vertices.push_back({(1 - o) * (1 - d), (1 - o) * d, o});
    }
  }
  return CredalSet(PlayerOneMoves(), vertices);
}

}  // namespace ambigame::testing

#endif  // AMBIGAME_TESTS_TEST_UTIL_H_
