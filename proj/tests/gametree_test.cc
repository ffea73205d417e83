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

#include <random>

#include "ambigame/builtin.h"
#include "ambigame/errors.h"
#include "ambigame/game_tree.h"
#include "ambigame/strategies.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace ambigame {
namespace {

using testing::Q;
using testing::V;

NodeSpec Leaf(std::vector<std::string> payoffs) {
  return NodeSpec{"", {}, std::move(payoffs)};
}

// One player moves twice: a/b, then c/d after a only.
GameTree TwoDecisionGame() {
  NodeSpec second{"1", {{"c", Leaf({"1"})}, {"d", Leaf({"2"})}}, {}};
  NodeSpec root{"1", {{"a", second}, {"b", Leaf({"3"})}}, {}};
  return GameTree({"1"}, root, {});
}

// The player forgets the first move: both successors share one set.
GameTree ForgetfulGame() {
  NodeSpec after{"1", {{"c", Leaf({"0"})}, {"d", Leaf({"1"})}}, {}};
  NodeSpec root{"1", {{"a", after}, {"b", after}}, {}};
  return GameTree({"1"}, root, {{{"a"}, {"b"}}});
}

TEST(GameTreeTest, TwoPlayerExampleStructure) {
  const GameTree g = TwoPlayerExampleGame();
  EXPECT_EQ(g.num_players(), 2);
  EXPECT_EQ(g.num_terminals(), 5);
  EXPECT_EQ(g.information_sets().size(), 2u);
  EXPECT_EQ(g.NumPureStrategies(0), 3);
  EXPECT_EQ(g.NumPureStrategies(1), 2);
  EXPECT_EQ(g.PureStrategyName(1, 0), "M");
  EXPECT_EQ(g.NodeName(g.terminals()[3]), "R N");
  EXPECT_EQ(g.NodeName(0), "root");
  EXPECT_EQ(*g.FindNode({"R", "N"}), g.terminals()[3]);
  EXPECT_FALSE(g.FindNode({"R", "Q"}).has_value());
  const Matrix u = g.ResolvePayoffs();
  EXPECT_EQ(u[1][1], 101);
  EXPECT_EQ(u[4][1], -1);
  EXPECT_EQ(u[4][0], 0);
}

TEST(GameTreeTest, ThreePlayerExampleStructure) {
  const GameTree g = ThreePlayerExampleGame();
  EXPECT_EQ(g.num_terminals(), 7);
  EXPECT_EQ(g.NumPureStrategies(2), 2);
  EXPECT_EQ(g.PureStrategyName(2, 1), "T");
  const int p3 = g.PlayerIndex("3");
  EXPECT_EQ(g.PlayerInformationSets(p3).size(), 1u);
  EXPECT_EQ(g.information_sets()[g.PlayerInformationSets(p3)[0]].nodes.size(),
            2u);
}

TEST(GameTreeTest, PayoffParameters) {
  const GameTree g = ThreePlayerExampleGame();
  const Matrix u = g.ResolvePayoffs({{"y_O_T", Q("7/2")}, {"x", Rational(3)}});
  EXPECT_EQ(u[6][2], Q("7/2"));
  EXPECT_EQ(u[0][0], 3);
  EXPECT_EQ(u[5][2], 0);  // Declared default.

  NodeSpec root{"1", {{"a", Leaf({"z"})}, {"b", Leaf({"1"})}}, {}};
  const GameTree open({"1"}, root, {});
  EXPECT_THROW(open.ResolvePayoffs(), UnboundParameter);
  EXPECT_EQ(open.ResolvePayoffs({{"z", Rational(5)}})[0][0], 5);
}

TEST(GameTreeTest, RejectsMalformedTrees) {
  EXPECT_THROW(GameTree({"1"}, NodeSpec{"2", {{"a", Leaf({"0"})}}, {}}, {}),
               MalformedGame);
  EXPECT_THROW(GameTree({"1"}, NodeSpec{"1", {}, {}}, {}), MalformedGame);
  EXPECT_THROW(
      GameTree({"1"}, NodeSpec{"1", {{"a", Leaf({"0"})}, {"a", Leaf({"1"})}}, {}},
               {}),
      MalformedGame);
  EXPECT_THROW(GameTree({"1"}, NodeSpec{"1", {{"a", Leaf({"0", "1"})}}, {}}, {}),
               MalformedGame);
  // Information set mixing different action lists.
  NodeSpec left{"1", {{"c", Leaf({"0"})}}, {}};
  NodeSpec right{"1", {{"d", Leaf({"0"})}}, {}};
  EXPECT_THROW(GameTree({"1"}, NodeSpec{"1", {{"a", left}, {"b", right}}, {}},
                        {{{"a"}, {"b"}}}),
               MalformedGame);
  // Path naming a terminal.
  EXPECT_THROW(GameTree({"1"}, NodeSpec{"1", {{"a", Leaf({"0"})}}, {}}, {{{"a"}}}),
               MalformedGame);
}

TEST(PerfectRecallTest, Examples) {
  EXPECT_FALSE(FindPerfectRecallViolation(TwoPlayerExampleGame()).has_value());
  EXPECT_FALSE(FindPerfectRecallViolation(ThreePlayerExampleGame()).has_value());
  const auto v = FindPerfectRecallViolation(ForgetfulGame());
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->player, 0);
  const GameTree g = ForgetfulGame();
  EXPECT_EQ(g.NodeName(v->first_node), "a");
  EXPECT_EQ(g.NodeName(v->second_node), "b");
}

TEST(PerfectRecallTest, RandomTreesHaveRecall) {
  std::mt19937_64 rng(5);
  int with_shared_sets = 0;
  for (int i = 0; i < 200; ++i) {
    const auto spec = testing::RandomPerfectRecallTree(rng);
    const GameTree g = testing::BuildRandomTree(spec);
    EXPECT_FALSE(FindPerfectRecallViolation(g).has_value());
    EXPECT_LE(g.num_terminals(), 8);
    if (!spec.information_sets.empty()) ++with_shared_sets;
  }
  // The generator must exercise imperfect information, not just trees.
  EXPECT_GT(with_shared_sets, 40);
}

// ---------------------------------------------------------------------------

BehavioralStrategy Locals(int player, std::vector<Vector> locals) {
  return {player, std::move(locals)};
}

TEST(OutcomeTest, OutsideOptionSurely) {
  const GameTree g = TwoPlayerExampleGame();
  const auto d = ComputeOutcomeDistribution(
      g, {Locals(0, {V({"0", "0", "1"})}), Locals(1, {V({"1/3", "2/3"})})});
  EXPECT_EQ(d, V({"0", "0", "0", "0", "1"}));
}

TEST(OutcomeTest, RightThenMixed) {
  const GameTree g = TwoPlayerExampleGame();
  const auto d = ComputeOutcomeDistribution(
      g, {Locals(0, {V({"0", "1", "0"})}), Locals(1, {V({"1/2", "1/2"})})});
  EXPECT_EQ(d, V({"0", "0", "1/2", "1/2", "0"}));
}

TEST(OutcomeTest, ThreePlayerProfile) {
  const GameTree g = ThreePlayerExampleGame();
  const std::vector<BehavioralStrategy> profile = {
      Locals(0, {V({"1/2", "1/2", "0"})}), Locals(1, {V({"1/2", "1/2"})}),
      Locals(2, {V({"1", "0"})})};
  const auto d = ComputeOutcomeDistribution(g, profile);
  EXPECT_EQ(d, V({"1/4", "1/4", "1/4", "1/4", "0", "0", "0"}));
  // Path-product oracle over the raw spec.
  const Vector oracle = testing::PathProductOracle(
      ThreePlayerExampleRoot(),
      [&](const NodePath& path, const std::string& player, int action) {
        const int p = g.PlayerIndex(player);
        const int info = g.node(*g.FindNode(path)).information_set;
        return profile[p].locals[g.LocalIndex(info)][action];
      });
  EXPECT_EQ(d, oracle);
}

TEST(OutcomeTest, RejectsBadStrategies) {
  const GameTree g = TwoPlayerExampleGame();
  EXPECT_THROW(ComputeOutcomeDistribution(g, {Locals(0, {V({"1", "0", "0"})})}),
               InvalidArgument);
  EXPECT_THROW(ComputeOutcomeDistribution(
                   g, {Locals(0, {}), Locals(1, {V({"1/2", "1/2"})})}),
               InvalidArgument);
  EXPECT_THROW(ValidateStrategy(g, Locals(1, {V({"1/2", "1/3"})})),
               InvalidArgument);
}

// ---------------------------------------------------------------------------

TEST(KuhnTest, SingleInformationSetIsIdentity) {
  const GameTree g = TwoPlayerExampleGame();
  const MixedStrategy mixed{1, V({"1/102", "101/102"})};
  const BehavioralStrategy b = MixedToBehavioral(g, mixed);
  ASSERT_EQ(b.locals.size(), 1u);
  EXPECT_EQ(b.locals[0], mixed.weights);
  EXPECT_EQ(BehavioralToMixed(g, b).weights, mixed.weights);
  EXPECT_TRUE(OutcomeEquivalent(g, 1, mixed, b));
}

TEST(KuhnTest, PureStrategies) {
  const GameTree g = TwoDecisionGame();
  for (int k = 0; k < g.NumPureStrategies(0); ++k) {
    const BehavioralStrategy b = MixedToBehavioral(g, PureMixedStrategy(g, 0, k));
    const auto actions = g.PureStrategy(0, k);
    const BehavioralStrategy expected = PureBehavioralStrategy(g, 0, k);
    // Reached sets follow the pure choice; the second set is unreached after
    // b and gets the uniform local.
    if (actions[0] == 0) {
      EXPECT_EQ(b.locals, expected.locals);
    } else {
      EXPECT_EQ(b.locals[0], expected.locals[0]);
      EXPECT_EQ(b.locals[1], V({"1/2", "1/2"}));
    }
    EXPECT_EQ(BehavioralToMixed(g, expected).weights,
              PureMixedStrategy(g, 0, k).weights);
  }
}

TEST(KuhnTest, UniformOverFourPureStrategies) {
  const GameTree g = TwoDecisionGame();
  ASSERT_EQ(g.NumPureStrategies(0), 4);
  const BehavioralStrategy b =
      MixedToBehavioral(g, {0, V({"1/4", "1/4", "1/4", "1/4"})});
  EXPECT_EQ(b.locals, (std::vector<Vector>{V({"1/2", "1/2"}), V({"1/2", "1/2"})}));
}

TEST(KuhnTest, ProductOfLocals) {
  const GameTree g = TwoDecisionGame();
  const MixedStrategy m =
      BehavioralToMixed(g, Locals(0, {V({"1/2", "1/2"}), V({"1/3", "2/3"})}));
  EXPECT_EQ(m.weights, V({"1/6", "1/3", "1/6", "1/3"}));
}

TEST(KuhnTest, RejectsImperfectRecall) {
  const GameTree g = ForgetfulGame();
  EXPECT_THROW(MixedToBehavioral(g, {0, V({"1/2", "0", "0", "1/2"})}),
               PerfectRecallViolation);
}

TEST(OutcomeEquivalenceTest, Examples) {
  const GameTree g = TwoPlayerExampleGame();
  const MixedStrategy m1{1, V({"1", "0"})};
  const MixedStrategy m2{1, V({"1/102", "101/102"})};
  EXPECT_TRUE(OutcomeEquivalent(g, 1, m1, m1));
  EXPECT_TRUE(OutcomeEquivalent(g, 1, m2, MixedToBehavioral(g, m2)));
  EXPECT_FALSE(OutcomeEquivalent(g, 1, m1, m2));
  // Against L the two differ in the LM probability.
  const auto a = OutcomeAgainstPure(g, 1, m1, {0});
  const auto b = OutcomeAgainstPure(g, 1, m2, {0});
  EXPECT_EQ(a[0], 1);
  EXPECT_EQ(b[0], Q("1/102"));
}

TEST(OutcomeEquivalenceTest, DistinguishesUnreachedDifferences) {
  // Strategies differing only at an unreached set are equivalent.
  const GameTree g = TwoDecisionGame();
  EXPECT_TRUE(OutcomeEquivalent(g, 0, Locals(0, {V({"0", "1"}), V({"1", "0"})}),
                                Locals(0, {V({"0", "1"}), V({"0", "1"})})));
  EXPECT_FALSE(OutcomeEquivalent(g, 0, Locals(0, {V({"1", "0"}), V({"1", "0"})}),
                                 Locals(0, {V({"1", "0"}), V({"0", "1"})})));
}

// --- properties ------------------------------------------------------------

// Oracle for Kuhn's construction: local probability of an action equals the
// total weight of pure strategies that reach the set and pick the action,
// divided by the weight of those that reach it.
Vector KuhnOracleLocal(const GameTree& g, const MixedStrategy& m, int info) {
  const auto& set = g.information_sets()[info];
  const auto history = g.OwnHistory(m.player, set.nodes.front());
  Vector local(set.actions.size(), 0);
  Rational reach = 0;
  for (int k = 0; k < g.NumPureStrategies(m.player); ++k) {
    const auto pure = g.PureStrategy(m.player, k);
    bool consistent = true;
    for (const auto& [h, a] : history) {
      consistent = consistent && pure[g.LocalIndex(h)] == a;
    }
    if (!consistent) continue;
    reach += m.weights[k];
    local[pure[g.LocalIndex(info)]] += m.weights[k];
  }
  if (reach == 0) {
    return Vector(set.actions.size(), Rational(1, set.actions.size()));
  }
  for (auto& x : local) x /= reach;
  return local;
}

TEST(KuhnPropertyTest, RoundTripsOnRandomTrees) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 150; ++i) {
    const GameTree g = testing::BuildRandomTree(testing::RandomPerfectRecallTree(rng));
    for (int p = 0; p < g.num_players(); ++p) {
      const MixedStrategy m = testing::RandomMixed(rng, g, p);
      const BehavioralStrategy b = MixedToBehavioral(g, m);
      ASSERT_TRUE(OutcomeEquivalent(g, p, m, b)) << "tree " << i << " player " << p;
      const auto& sets = g.PlayerInformationSets(p);
      for (size_t k = 0; k < sets.size(); ++k) {
        EXPECT_EQ(b.locals[k], KuhnOracleLocal(g, m, sets[k]));
      }
      const BehavioralStrategy b2 = testing::RandomBehavioral(rng, g, p);
      const MixedStrategy m2 = BehavioralToMixed(g, b2);
      EXPECT_EQ(Sum(m2.weights), 1);
      ASSERT_TRUE(OutcomeEquivalent(g, p, b2, m2));
    }
  }
}

TEST(OutcomePropertyTest, SumsToOneAndMatchesPathProducts) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const auto spec = testing::RandomPerfectRecallTree(rng);
    const GameTree g = testing::BuildRandomTree(spec);
    std::vector<BehavioralStrategy> profile;
    for (int p = 0; p < g.num_players(); ++p) {
      profile.push_back(testing::RandomBehavioral(rng, g, p));
    }
    const auto d = ComputeOutcomeDistribution(g, profile);
    EXPECT_EQ(Sum(d), 1);
    const Vector oracle = testing::PathProductOracle(
        spec.root, [&](const NodePath& path, const std::string& player, int a) {
          const int info = g.node(*g.FindNode(path)).information_set;
          return profile[g.PlayerIndex(player)].locals[g.LocalIndex(info)][a];
        });
    EXPECT_EQ(d, oracle);
  }
}

TEST(OutcomePropertyTest, MultilinearInEachLocal) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const GameTree g = testing::BuildRandomTree(testing::RandomPerfectRecallTree(rng));
    std::vector<BehavioralStrategy> profile;
    for (int p = 0; p < g.num_players(); ++p) {
      profile.push_back(testing::RandomBehavioral(rng, g, p));
    }
    std::uniform_int_distribution<int> pick_player(0, g.num_players() - 1);
    const int p = pick_player(rng);
    if (profile[p].locals.empty()) continue;
    std::uniform_int_distribution<size_t> pick_set(0, profile[p].locals.size() - 1);
    const size_t k = pick_set(rng);
    const int width = static_cast<int>(profile[p].locals[k].size());
    const Vector a = testing::RandomDistribution(rng, width);
    const Vector b = testing::RandomDistribution(rng, width);
    const Rational lambda = testing::RandomRational(rng, 0, 1, 7);

    auto with_local = [&](const Vector& local) {
      auto copy = profile;
      copy[p].locals[k] = local;
      return ComputeOutcomeDistribution(g, copy);
    };
    const auto mixed = with_local(Add(Scale(lambda, a), Scale(1 - lambda, b)));
    const auto blended =
        Add(Scale(lambda, with_local(a)), Scale(1 - lambda, with_local(b)));
    EXPECT_EQ(mixed, blended);
  }
}

}  // namespace
}  // namespace ambigame
