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

#include "ambigame/dynamics.h"

#include <algorithm>
#include <set>
#include <utility>

#include "ambigame/errors.h"

namespace ambigame {
namespace {

struct CanonicalState {
  std::string label;
  std::vector<int> terminals;     // Terminal ordinal per own pure strategy.
  std::vector<int> own_reached;   // Own information sets met in some play.
};

// Plays the game out under pure strategies (action vectors per player).
// Returns the terminal ordinal and appends every information set visited.
int PlayOut(const GameTree& game, const std::vector<std::vector<int>>& pure,
            std::vector<int>* visited) {
  int n = 0;
  while (!game.node(n).is_terminal()) {
    const auto& node = game.node(n);
    visited->push_back(node.information_set);
    const int a = pure[node.player][game.LocalIndex(node.information_set)];
    n = node.children[a];
  }
  return game.node(n).terminal_index;
}

std::vector<CanonicalState> EnumerateStates(const GameTree& game, int player) {
  const int num_players = game.num_players();
  std::vector<int> counts(num_players, 1);
  for (int p = 0; p < num_players; ++p) {
    if (p != player) counts[p] = game.NumPureStrategies(p);
  }
  const int num_own = game.NumPureStrategies(player);

  struct Raw {
    std::vector<int> terminals;
    std::map<int, int> opponent_moves;  // information set -> action index
    std::set<int> own_reached;
  };
  std::vector<Raw> classes;
  std::vector<int> index(num_players, 0);
  while (true) {
    std::vector<std::vector<int>> pure(num_players);
    for (int p = 0; p < num_players; ++p) {
      if (p != player) pure[p] = game.PureStrategy(p, index[p]);
    }
    Raw raw;
    for (int own = 0; own < num_own; ++own) {
      pure[player] = game.PureStrategy(player, own);
      std::vector<int> visited;
      raw.terminals.push_back(PlayOut(game, pure, &visited));
      for (int info : visited) {
        const int owner = game.information_sets()[info].player;
        if (owner == player) {
          raw.own_reached.insert(info);
        } else {
          raw.opponent_moves[info] = pure[owner][game.LocalIndex(info)];
        }
      }
    }
    auto same = [&](const Raw& r) { return r.terminals == raw.terminals; };
    if (std::find_if(classes.begin(), classes.end(), same) == classes.end()) {
      classes.push_back(std::move(raw));
    }
    int p = num_players - 1;
    while (p >= 0 && ++index[p] == counts[p]) index[p--] = 0;
    if (p < 0) break;
  }

  auto make_labels = [&](const std::string& sep) {
    std::vector<std::string> labels;
    for (const auto& c : classes) {
      std::string label;
      for (const auto& [info, action] : c.opponent_moves) {
        if (!label.empty()) label += sep;
        label += game.information_sets()[info].actions[action];
      }
      labels.push_back(label.empty() ? "*" : label);
    }
    return labels;
  };
  auto labels = make_labels("");
  if (std::set<std::string>(labels.begin(), labels.end()).size() !=
      labels.size()) {
    labels = make_labels(".");
  }
  std::vector<CanonicalState> out;
  for (size_t i = 0; i < classes.size(); ++i) {
    out.push_back({labels[i], classes[i].terminals,
                   {classes[i].own_reached.begin(), classes[i].own_reached.end()}});
  }
  return out;
}

Matrix RestrictColumns(const Matrix& m, const Cell& columns) {
  Matrix out;
  for (const auto& row : m) {
    Vector r;
    for (int c : columns) r.push_back(row[c]);
    out.push_back(std::move(r));
  }
  return out;
}

// Groups state indices by key, in order of first appearance.
template <typename Key>
std::vector<Cell> GroupBy(const std::vector<Key>& keys) {
  std::vector<Cell> groups;
  std::vector<Key> seen;
  for (size_t i = 0; i < keys.size(); ++i) {
    auto it = std::find(seen.begin(), seen.end(), keys[i]);
    if (it == seen.end()) {
      seen.push_back(keys[i]);
      groups.push_back({static_cast<int>(i)});
    } else {
      groups[it - seen.begin()].push_back(static_cast<int>(i));
    }
  }
  return groups;
}

}  // namespace

std::vector<std::string> CanonicalStates(const GameTree& game, int player) {
  std::vector<std::string> labels;
  for (const auto& s : EnumerateStates(game, player)) labels.push_back(s.label);
  return labels;
}

PlayerProblem BuildPlayerProblem(const GameTree& game, int player,
                                 const CredalSet& beliefs,
                                 const Bindings& bindings,
                                 const StateGroups& groups) {
  if (player < 0 || player >= game.num_players()) {
    throw InvalidArgument("player index out of range");
  }
  if (auto v = FindPerfectRecallViolation(game)) {
    throw PerfectRecallViolation(v->message);
  }
  const Matrix payoffs = game.ResolvePayoffs(bindings);
  const auto canonical = EnumerateStates(game, player);
  const int num_own = game.NumPureStrategies(player);

  auto canonical_index = [&](const std::string& label) {
    for (size_t i = 0; i < canonical.size(); ++i) {
      if (canonical[i].label == label) return static_cast<int>(i);
    }
    return -1;
  };
  auto column = [&](int c) {
    Vector col;
    for (int own = 0; own < num_own; ++own) {
      col.push_back(payoffs[canonical[c].terminals[own]][player]);
    }
    return col;
  };

  // Representative canonical state for every belief state.
  const StateSpace& space = beliefs.space();
  std::vector<int> representative;
  std::vector<int> covered(canonical.size(), 0);
  for (const auto& label : space.labels()) {
    std::vector<int> members;
    if (auto g = groups.find(label); g != groups.end()) {
      for (const auto& m : g->second) {
        const int c = canonical_index(m);
        if (c < 0) {
          throw StateSpaceMismatch("group '" + label + "' names unknown state '" +
                                   m + "'");
        }
        members.push_back(c);
      }
    } else if (const int c = canonical_index(label); c >= 0) {
      members.push_back(c);
    } else {
      throw StateSpaceMismatch("belief state '" + label +
                               "' is not a state of player " +
                               game.players()[player] + "'s problem");
    }
    if (members.empty()) {
      throw StateSpaceMismatch("group '" + label + "' is empty");
    }
    for (int c : members) {
      ++covered[c];
      if (column(c) != column(members.front()) ||
          canonical[c].own_reached != canonical[members.front()].own_reached) {
        throw StateSpaceMismatch(
            "state '" + label + "' does not determine player " +
            game.players()[player] + "'s payoffs: members '" +
            canonical[members.front()].label + "' and '" + canonical[c].label +
            "' differ");
      }
    }
    representative.push_back(members.front());
  }
  for (size_t c = 0; c < canonical.size(); ++c) {
    if (covered[c] != 1) {
      throw StateSpaceMismatch("state '" + canonical[c].label + "' is " +
                               (covered[c] == 0 ? "missing from"
                                                : "listed twice in") +
                               " the beliefs");
    }
  }

  Matrix payoff(num_own, Vector(space.size()));
  for (int s = 0; s < space.size(); ++s) {
    const Vector col = column(representative[s]);
    for (int own = 0; own < num_own; ++own) payoff[own][s] = col[own];
  }
  std::vector<std::string> actions;
  for (int own = 0; own < num_own; ++own) {
    actions.push_back(game.PureStrategyName(player, own));
  }

  std::vector<std::vector<int>> reached;
  for (int s = 0; s < space.size(); ++s) {
    reached.push_back(canonical[representative[s]].own_reached);
  }
  const std::vector<Cell> partition = GroupBy(reached);
  std::vector<InformationCell> cells;
  for (const auto& cell : partition) {
    cells.push_back({cell, reached[cell.front()], RestrictColumns(payoff, cell)});
  }
  return PlayerProblem{player,
                       DecisionProblem(std::move(actions), payoff, beliefs),
                       Filtration(space, {partition}), std::move(cells)};
}

DecisionProblem ConditionalProblem(const PlayerProblem& pp, int cell_index) {
  const auto& cell = pp.cells.at(cell_index);
  return DecisionProblem(pp.exante.actions(), cell.payoff,
                         FullBayesUpdate(pp.exante.beliefs(), cell.states));
}

PlayerProblem AggregateIdenticalPayoffStates(
    const PlayerProblem& pp,
    const std::map<std::vector<std::string>, std::string>& names) {
  const StateSpace& space = pp.exante.space();
  const Matrix& payoff = pp.exante.payoff();
  const int n = space.size();

  // Key: (stage-1 cell, payoff column).
  std::vector<int> cell_of(n);
  for (size_t c = 0; c < pp.cells.size(); ++c) {
    for (int s : pp.cells[c].states) cell_of[s] = static_cast<int>(c);
  }
  std::vector<std::pair<int, Vector>> keys;
  for (int s = 0; s < n; ++s) {
    Vector col;
    for (const auto& row : payoff) col.push_back(row[s]);
    keys.emplace_back(cell_of[s], std::move(col));
  }
  const std::vector<Cell> merged = GroupBy(keys);

  std::vector<std::string> labels;
  Matrix summing(merged.size(), Vector(n));
  std::vector<int> new_index(n);
  for (size_t g = 0; g < merged.size(); ++g) {
    std::vector<std::string> members;
    for (int s : merged[g]) {
      members.push_back(space.label(s));
      summing[g][s] = 1;
      new_index[s] = static_cast<int>(g);
    }
    if (auto it = names.find(members); it != names.end()) {
      labels.push_back(it->second);
    } else {
      std::string joined;
      for (const auto& m : members) joined += (joined.empty() ? "" : "+") + m;
      labels.push_back(joined);
    }
  }
  StateSpace new_space(labels);
  CredalSet beliefs(new_space,
                    AffineImage(pp.exante.beliefs().polytope(), summing,
                                Vector(merged.size())));
  Matrix new_payoff(payoff.size(), Vector(merged.size()));
  for (size_t a = 0; a < payoff.size(); ++a) {
    for (size_t g = 0; g < merged.size(); ++g) {
      new_payoff[a][g] = payoff[a][merged[g].front()];
    }
  }
  Partition partition;
  std::vector<InformationCell> cells;
  for (const auto& old : pp.cells) {
    Cell c;
    for (int s : old.states) {
      if (std::find(c.begin(), c.end(), new_index[s]) == c.end()) {
        c.push_back(new_index[s]);
      }
    }
    std::sort(c.begin(), c.end());
    partition.push_back(c);
    cells.push_back({c, old.information_sets, RestrictColumns(new_payoff, c)});
  }
  return PlayerProblem{
      pp.player,
      DecisionProblem(pp.exante.actions(), new_payoff, std::move(beliefs)),
      Filtration(new_space, {partition}), std::move(cells)};
}

Vector InducedPrior(const Vector& lro, const Rational& n) {
  if (lro.size() != 3) throw DimensionMismatch("expected a prior over 3 states");
  return {lro[0] + lro[1] * (1 - n), lro[1] * n, lro[2]};
}

CredalSet InduceDownstream(const CredalSet& upstream, const Rational& n_low,
                           const Rational& n_high,
                           std::vector<std::string> labels) {
  if (upstream.space().size() != 3) {
    throw DimensionMismatch("upstream beliefs must be over three states");
  }
  if (n_low < 0 || n_high > 1 || n_low > n_high) {
    throw InvalidArgument("interval [" + ToString(n_low) + ", " +
                          ToString(n_high) + "] is not inside [0, 1]");
  }
  std::vector<Vector> images;
  for (const auto& v : upstream.vertices()) {
    images.push_back(InducedPrior(v, n_low));
    images.push_back(InducedPrior(v, n_high));
  }
  return CredalSet(StateSpace(std::move(labels)), std::move(images));
}

std::string VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kConsistent:
      return "Consistent";
    case Verdict::kInconsistent:
      return "Inconsistent";
    case Verdict::kUnreachable:
      return "Unreachable";
  }
  return "?";
}

ConsistencyReport CheckDynamicConsistency(const PlayerProblem& pp) {
  ConsistencyReport report{SolveMaxmin(pp.exante), {}, true};
  const auto& space = pp.exante.space();
  for (size_t c = 0; c < pp.cells.size(); ++c) {
    const auto& cell = pp.cells[c];
    if (!cell.acts()) continue;
    CellVerdict verdict;
    verdict.cell_index = static_cast<int>(c);
    verdict.cell_name = CellName(space, cell.states);
    std::optional<DecisionProblem> conditional;
    try {
      conditional = ConditionalProblem(pp, static_cast<int>(c));
    } catch (const ZeroProbabilityReach& e) {
      verdict.verdict = Verdict::kUnreachable;
      verdict.note = e.what();
      report.cells.push_back(std::move(verdict));
      continue;
    }
    verdict.conditional = SolveMaxmin(*conditional);
    verdict.restricted =
        SolveConstrainedMaxmin(*conditional, report.exante.optimal_face);
    verdict.value_gap = verdict.conditional->value - verdict.restricted->value;
    verdict.verdict = *verdict.value_gap == 0 ? Verdict::kConsistent
                                              : Verdict::kInconsistent;
    if (verdict.verdict == Verdict::kInconsistent) report.consistent = false;
    report.cells.push_back(std::move(verdict));
  }
  return report;
}

PayoffSearch FindDcViolationPayoffs(const GameTree& game, int player,
                                    const CredalSet& beliefs,
                                    const std::vector<Rational>& grid,
                                    const std::vector<std::string>& slots,
                                    const Bindings& base,
                                    const StateGroups& groups) {
  PayoffSearch search;
  if (grid.empty() && !slots.empty()) return search;
  std::vector<size_t> choice(slots.size(), 0);
  while (true) {
    Bindings bindings = base;
    Bindings assignment;
    for (size_t i = 0; i < slots.size(); ++i) {
      bindings[slots[i]] = grid[choice[i]];
      assignment[slots[i]] = grid[choice[i]];
    }
    ++search.assignments_checked;
    ConsistencyReport report = CheckDynamicConsistency(
        BuildPlayerProblem(game, player, beliefs, bindings, groups));
    if (!report.consistent) {
      search.violation = PayoffViolation{std::move(assignment),
                                         std::move(report),
                                         search.assignments_checked};
      return search;
    }
    size_t i = slots.size();
    while (i > 0 && ++choice[i - 1] == grid.size()) choice[--i] = 0;
    if (i == 0) return search;
  }
}

}  // namespace ambigame
