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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. All comparisons are exact.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "ambigame/beliefs.h"
#include "ambigame/builtin.h"
#include "ambigame/cli.h"
#include "ambigame/dynamics.h"
#include "ambigame/maxmin.h"
#include "ambigame/strategies.h"
#include "ambigame/svg.h"
#include "test_util.h"

namespace ambigame {
namespace {

using testing::Q;
using testing::SameVertexSet;
using testing::V;

// Collects failure messages for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string Summary() const {
    std::string out;
    for (const auto& f : failures_) out += "\n    " + f;
    return out;
  }

 private:
  std::vector<std::string> failures_;
  int count_ = 0;
};

// --- independent oracles -------------------------------------------------------
// With two pure strategies the maxmin objective at s = P(first) is the lower
// envelope of one line per prior; its maximum lies at an endpoint or at a
// crossing of two lines.

struct Line {
  Rational c0, c1;  // value = c0 + c1 * s
};

std::vector<Line> LinesFor(const Matrix& payoff, const std::vector<Vector>& priors) {
  std::vector<Line> lines;
  for (const auto& p : priors) {
    Rational a = 0, b = 0;
    for (size_t i = 0; i < p.size(); ++i) {
      a += payoff[0][i] * p[i];
      b += payoff[1][i] * p[i];
    }
    lines.push_back({b, a - b});
  }
  return lines;
}

Rational EnvelopeAt(const std::vector<Line>& lines, const Rational& s) {
  Rational best = lines.front().c0 + lines.front().c1 * s;
  for (const auto& l : lines) {
    const Rational v = l.c0 + l.c1 * s;
    if (v < best) best = v;
  }
  return best;
}

struct EnvelopeMax {
  Rational value;
  Rational lo, hi;  // Interval of maximizers.
};

EnvelopeMax MaximizeEnvelope(const std::vector<Line>& lines, const Rational& lo,
                             const Rational& hi) {
  std::vector<Rational> candidates = {lo, hi};
  for (size_t i = 0; i < lines.size(); ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      const Rational d = lines[i].c1 - lines[j].c1;
      if (d == 0) continue;
      const Rational s = (lines[j].c0 - lines[i].c0) / d;
      if (s >= lo && s <= hi) candidates.push_back(s);
    }
  }
  EnvelopeMax out{EnvelopeAt(lines, lo), hi, lo};
  for (const auto& s : candidates) {
    const Rational v = EnvelopeAt(lines, s);
    if (v > out.value) out.value = v;
  }
  for (const auto& s : candidates) {
    if (EnvelopeAt(lines, s) == out.value) {
      if (s < out.lo) out.lo = s;
      if (s > out.hi) out.hi = s;
    }
  }
  return out;
}

// Conditional of `p` on the coordinates in `cell`.
Vector ConditionOn(const Vector& p, const std::vector<int>& cell) {
  Rational mass = 0;
  for (int i : cell) mass += p[i];
  Vector out;
  for (int i : cell) out.push_back(p[i] / mass);
  return out;
}

// Lexicographic inconsistency for a two-strategy player, all priors giving
// the cell positive mass.
bool OracleInconsistent(const Matrix& payoff, const std::vector<Vector>& priors,
                        const std::vector<int>& cell) {
  const EnvelopeMax ex = MaximizeEnvelope(LinesFor(payoff, priors), 0, 1);
  Matrix restricted(2);
  for (int k = 0; k < 2; ++k) {
    for (int i : cell) restricted[k].push_back(payoff[k][i]);
  }
  std::vector<Vector> posteriors;
  for (const auto& p : priors) posteriors.push_back(ConditionOn(p, cell));
  const auto lines = LinesFor(restricted, posteriors);
  return MaximizeEnvelope(lines, ex.lo, ex.hi).value !=
         MaximizeEnvelope(lines, 0, 1).value;
}

// The generating points (1 - eps) e_R + eps e_i of the contamination.
std::vector<Vector> ContaminationPoints(const Rational& eps) {
  return {V({"0", "1", "0"}) /* e_R itself */,
          {eps, 1 - eps, 0},
          {0, 1 - eps, eps}};
}

// Player 2's payoff by hand: M pays (0, 101, -1), N pays (101, 100, -1).
const Matrix& PlayerTwoPayoff() {
  static const Matrix m = {V({"0", "101", "-1"}), V({"101", "100", "-1"})};
  return m;
}

const StateGroups kZ = {{"Z", {"LM", "LN", "RM"}}};

CredalSet InducedExample() {
  return InduceDownstream(ExampleRectangularBeliefs(), Q("1/3"), Q("1/2"));
}

// --- criteria -----------------------------------------------------------------

Check ExAnteOptimum() {
  Check c;
  for (const char* e : {"1/4", "1/50"}) {
    const Rational eps = Q(e);
    const CredalSet beliefs = EpsContamination(PlayerOneMoves(), V({"0", "1", "0"}), eps);
    const PlayerProblem pp = BuildPlayerProblem(TwoPlayerExampleGame(), 1, beliefs);
    const MaxminSolution s = SolveMaxmin(pp.exante);
    const Vector worst = {0, 1 - eps, eps};
    c.Expect(s.strategy == V({"1", "0"}), std::string("m = 1 at eps ") + e);
    c.Expect(SameVertexSet(s.optimal_face.vertices(), {V({"1", "0"})}),
             std::string("unique maximizer at eps ") + e);
    c.Expect(SameVertexSet(s.binding_vertices, {worst}),
             std::string("inner minimum at (0, 1-eps, eps) at eps ") + e);
    // Oracle: envelope over the generating points.
    const auto lines = LinesFor(PlayerTwoPayoff(), ContaminationPoints(eps));
    const EnvelopeMax best = MaximizeEnvelope(lines, 0, 1);
    c.Expect(best.lo == 1 && best.hi == 1 && best.value == s.value,
             std::string("envelope oracle at eps ") + e);
    c.Expect(s.value == 101 - 102 * eps, std::string("value 101 - 102 eps at ") + e);
    int minimizers = 0;
    for (const auto& p : ContaminationPoints(eps)) {
      minimizers += Dot(PlayerTwoPayoff()[0], p) == s.value;
    }
    c.Expect(minimizers == 1 && Dot(PlayerTwoPayoff()[0], worst) == s.value,
             std::string("worst prior unique at eps ") + e);
  }
  return c;
}

Check ConditionalOptimum() {
  Check c;
  const Rational eps = Q("1/4");
  const CredalSet beliefs = EpsContamination(PlayerOneMoves(), V({"0", "1", "0"}), eps);
  const CredalSet posterior = FullBayesUpdate(beliefs, {0, 1});
  // Segment delta = P(R | {L,R}) in [3/4, 1].
  c.Expect(SameVertexSet(posterior.vertices(), {V({"0", "1"}), V({"1/4", "3/4"})}),
           "update is the segment delta in [3/4, 1]");
  std::vector<Vector> oracle_post;
  for (const auto& p : ContaminationPoints(eps)) oracle_post.push_back(ConditionOn(p, {0, 1}));
  for (const auto& p : oracle_post) c.Expect(posterior.Contains(p), "posterior contains oracle points");

  const PlayerProblem pp = BuildPlayerProblem(TwoPlayerExampleGame(), 1, beliefs);
  int cell = -1;
  for (size_t i = 0; i < pp.cells.size(); ++i) {
    if (pp.cells[i].states == Cell{0, 1}) cell = static_cast<int>(i);
  }
  c.Expect(cell >= 0, "cell {L,R} exists");
  if (cell < 0) return c;
  const MaxminSolution s = SolveMaxmin(ConditionalProblem(pp, cell));
  c.Expect(s.strategy == V({"1/102", "101/102"}), "conditional m = 1/102");
  c.Expect(s.value == 100 + Q("1/102"), "conditional value 100 + 1/102");
  const Matrix restricted = {V({"0", "101"}), V({"101", "100"})};
  const EnvelopeMax best = MaximizeEnvelope(LinesFor(restricted, oracle_post), 0, 1);
  c.Expect(best.lo == Q("1/102") && best.hi == Q("1/102") && best.value == s.value,
           "envelope oracle for the conditional problem");
  return c;
}

Check Threshold() {
  Check c;
  const std::vector<Rational> eps = {Q("1/200"), Q("1/103"), Q("1/102"),
                                     Q("1/101"), Q("1/100"), Q("1/4")};
  const auto rows = SweepEps(LoadScenario("fig1"), eps, 4);
  c.Expect(rows.size() == eps.size(), "one row per eps");
  for (size_t i = 0; i < rows.size() && i < eps.size(); ++i) {
    const bool inconsistent = !rows[i].report.consistent;
    const std::string e = ToString(rows[i].eps);
    c.Expect(rows[i].eps == eps[i], "rows ordered by eps");
    c.Expect(inconsistent == (rows[i].eps > Rational(1, 102)),
             "Inconsistent exactly when eps > 1/102, at eps " + e);
    const auto priors = ContaminationPoints(rows[i].eps);
    c.Expect(inconsistent == OracleInconsistent(PlayerTwoPayoff(), priors, {0, 1}),
             "envelope oracle verdict at eps " + e);
  }
  return c;
}

Check RectHull() {
  Check c;
  const CredalSet beliefs =
      EpsContamination(PlayerOneMoves(), V({"0", "1", "0"}), Q("1/4"));
  const Filtration f = Filtration::FromLabels(PlayerOneMoves(), {{{"L", "R"}, {"O"}}});
  const CredalSet hull = RectangularHull(beliefs, f);
  const std::vector<Vector> expected = {V({"0", "1", "0"}), V({"1/4", "3/4", "0"}),
                                        V({"0", "3/4", "1/4"}), V({"3/16", "9/16", "1/4"})};
  c.Expect(SameVertexSet(hull.vertices(), expected), "hull vertex set");
  // Oracle: compose P(O) in {0, 1/4} with P(R | {L,R}) in {3/4, 1}.
  std::vector<Vector> composed;
  for (const Rational o : {Rational(0), Rational(1, 4)}) {
    for (const Rational d : {Rational(3, 4), Rational(1)}) {
      composed.push_back({(1 - o) * (1 - d), (1 - o) * d, o});
    }
  }
  c.Expect(SameVertexSet(composed, expected), "composition oracle");
  const RectangularityResult before = CheckRectangular(beliefs, f);
  c.Expect(!before.rectangular, "not rectangular before hulling");
  c.Expect(before.witness && *before.witness == V({"3/16", "9/16", "1/4"}),
           "witness (3/16, 9/16, 1/4)");
  c.Expect(CheckRectangular(hull, f).rectangular, "rectangular after hulling");
  c.Expect(CredalSetsEqual(RectangularHull(hull, f), hull), "idempotent");
  return c;
}

Check ConsistencyRestored() {
  Check c;
  const CredalSet beliefs =
      EpsContamination(PlayerOneMoves(), V({"0", "1", "0"}), Q("1/4"));
  const PlayerProblem raw = BuildPlayerProblem(TwoPlayerExampleGame(), 1, beliefs);
  const CredalSet hull = RectangularHull(beliefs, raw.filtration);
  const ConsistencyReport r =
      CheckDynamicConsistency(BuildPlayerProblem(TwoPlayerExampleGame(), 1, hull));
  c.Expect(r.consistent, "Consistent after hulling");
  c.Expect(r.exante.strategy == V({"1/102", "101/102"}), "ex-ante m = 1/102");
  c.Expect(r.cells.size() == 1 && r.cells[0].conditional &&
               r.cells[0].conditional->strategy == V({"1/102", "101/102"}),
           "conditional m = 1/102");
  c.Expect(!OracleInconsistent(PlayerTwoPayoff(), hull.vertices(), {0, 1}),
           "envelope oracle agrees");
  const EnvelopeMax ex = MaximizeEnvelope(LinesFor(PlayerTwoPayoff(), hull.vertices()), 0, 1);
  c.Expect(ex.lo == Q("1/102") && ex.hi == Q("1/102"), "oracle ex-ante optimum 1/102");
  // The same through the CLI.
  std::ostringstream out, err;
  const int code = Run({"check-dc", "fig1", "--eps", "1/4", "--rectangularize", "--json"}, out, err);
  c.Expect(code == 0 && out.str().find("\"verdict\": \"Consistent\"") != std::string::npos,
           "CLI reports Consistent");
  return c;
}

Check Induction() {
  Check c;
  const CredalSet induced = InducedExample();
  const std::vector<Vector> expected = {V({"35/64", "21/64", "1/8"}), V({"35/48", "7/48", "1/8"}),
                                        V({"5/12", "1/12", "1/2"}), V({"5/16", "3/16", "1/2"})};
  c.Expect(SameVertexSet(induced.vertices(), expected), "induced vertex set A'..D'");
  auto ratio = [](const Vector& p) { return Rational(p[1] / (p[0] + p[1])); };
  c.Expect(ratio(expected[0]) == Q("3/8") && ratio(expected[3]) == Q("3/8"), "A', D' ratio 3/8");
  c.Expect(ratio(expected[1]) == Q("1/6") && ratio(expected[2]) == Q("1/6"), "B', C' ratio 1/6");
  // Oracle: images (l + r(1-n), rn) of A..D at n = 1/3, 1/2 and their planar hull.
  std::vector<Vector> images;
  for (const auto& v : ExampleRectangularVertices()) {
    for (const Rational n : {Rational(1, 3), Rational(1, 2)}) {
      images.push_back({v[0] + v[1] * (1 - n), v[1] * n});
    }
  }
  std::vector<Vector> planar;
  for (const auto& v : expected) planar.push_back({v[0], v[1]});
  c.Expect(SameVertexSet(PlanarHull(images), planar), "planar hull oracle");
  for (const auto& v : induced.vertices()) {
    c.Expect(v[0] + v[1] + v[2] == 1, "o implied by 1 - z - rn");
  }
  return c;
}

bool InsideConvexPolygon(const std::vector<Vector>& hull, const Vector& p) {
  for (size_t k = 0; k < hull.size(); ++k) {
    const Vector& a = hull[k];
    const Vector& b = hull[(k + 1) % hull.size()];
    if ((b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) < 0) return false;
  }
  return true;
}

Check NonRectangular() {
  Check c;
  const CredalSet induced = InducedExample();
  const Filtration f3 =
      Filtration::FromLabels(induced.space(), {{{"Z"}, {"RN", "O"}}});
  const RectangularityResult r = CheckRectangular(induced, f3);
  c.Expect(!r.rectangular, "not rectangular under {{Z},{RN,O}}");
  c.Expect(r.witness.has_value(), "witness present");
  if (!r.witness) return c;
  const Vector& w = *r.witness;
  c.Expect(IsProbabilityVector(w), "witness is a prior");
  // Outside the set: independent planar containment test in (z, rn).
  std::vector<Vector> planar;
  for (const auto& v : induced.vertices()) planar.push_back({v[0], v[1]});
  c.Expect(!InsideConvexPolygon(PlanarHull(planar), {w[0], w[1]}), "witness outside the set");
  // Recombination: its Z-mass is some prior's, and its conditional on
  // {RN,O} is some prior's.
  Rational zlo = 1, zhi = 0, clo = 1, chi = 0;
  for (const auto& v : induced.vertices()) {
    zlo = std::min(zlo, v[0]);
    zhi = std::max(zhi, v[0]);
    const Rational share = v[1] / (v[1] + v[2]);
    clo = std::min(clo, share);
    chi = std::max(chi, share);
  }
  const Rational wshare = w[1] / (w[1] + w[2]);
  c.Expect(zlo <= w[0] && w[0] <= zhi, "witness Z-marginal attained by the set");
  c.Expect(clo <= wshare && wshare <= chi, "witness conditional attained by the set");
  return c;
}

Check CounterexamplePayoffs() {
  Check c;
  const GameTree g = ThreePlayerExampleGame();
  const std::vector<Rational> grid = {-1, 0, 1, 100, 101};
  const PayoffSearch search =
      FindDcViolationPayoffs(g, 2, InducedExample(), grid, ThreePlayerExampleSlots(), {}, kZ);
  c.Expect(search.violation.has_value(), "a violating assignment exists");
  if (!search.violation) return c;
  c.Expect(!search.violation->report.consistent, "its report is Inconsistent");
  const PlayerProblem again =
      BuildPlayerProblem(g, 2, InducedExample(), search.violation->payoffs, kZ);
  c.Expect(!CheckDynamicConsistency(again).consistent, "re-check confirms");
  // Oracle: payoffs by hand over (Z, RN, O) with y = 0, cell {RN, O}.
  const Bindings& b = search.violation->payoffs;
  const Matrix payoff = {{0, b.at("y_RN_S"), b.at("y_O_S")},
                         {0, b.at("y_RN_T"), b.at("y_O_T")}};
  c.Expect(OracleInconsistent(payoff, InducedExample().vertices(), {1, 2}),
           "envelope oracle confirms");
  return c;
}

// Terminal distribution by explicit path products when `player` plays the
// local rule `own` and every opponent plays its pure strategy.
Vector OracleOutcome(const testing::RandomTree& spec, const GameTree& g, int player,
                     const std::function<Rational(int info, int action)>& own,
                     const std::vector<int>& opponent_pure) {
  return testing::PathProductOracle(
      spec.root, [&](const NodePath& path, const std::string& name, int action) {
        const int p = g.PlayerIndex(name);
        const int info = g.node(*g.FindNode(path)).information_set;
        if (p == player) return own(info, action);
        const auto pure = g.PureStrategy(p, opponent_pure[p]);
        return Rational(pure[g.LocalIndex(info)] == action ? 1 : 0);
      });
}

Check Kuhn() {
  Check c;
  std::mt19937_64 rng(2026);
  int trees = 0;
  for (; trees < 120; ++trees) {
    const auto spec = testing::RandomPerfectRecallTree(rng, 3, 8);
    const GameTree g = testing::BuildRandomTree(spec);
    c.Expect(g.num_players() <= 3 && g.num_terminals() <= 8, "tree size bounds");
    for (int p = 0; p < g.num_players(); ++p) {
      const MixedStrategy m = testing::RandomMixed(rng, g, p);
      const BehavioralStrategy b = MixedToBehavioral(g, m);
      const BehavioralStrategy b2 = testing::RandomBehavioral(rng, g, p);
      const MixedStrategy m2 = BehavioralToMixed(g, b2);
      // Every opponent pure profile.
      std::vector<int> counts(g.num_players()), profile(g.num_players(), 0);
      for (int q = 0; q < g.num_players(); ++q) counts[q] = q == p ? 1 : g.NumPureStrategies(q);
      auto behavioral_rule = [&](const BehavioralStrategy& s) {
        return [&g, &s](int info, int action) { return s.locals[g.LocalIndex(info)][action]; };
      };
      auto mixed_outcome = [&](const MixedStrategy& mixed) {
        Vector total(g.num_terminals(), 0);
        for (int k = 0; k < g.NumPureStrategies(p); ++k) {
          const auto pure = g.PureStrategy(p, k);
          const Vector d = OracleOutcome(spec, g, p, [&](int info, int action) {
            return Rational(pure[g.LocalIndex(info)] == action ? 1 : 0);
          }, profile);
          total = Add(total, Scale(mixed.weights[k], d));
        }
        return total;
      };
      while (true) {
        c.Expect(mixed_outcome(m) == OracleOutcome(spec, g, p, behavioral_rule(b), profile),
                 "mixed_to_behavioral is outcome-equivalent");
        c.Expect(mixed_outcome(m2) == OracleOutcome(spec, g, p, behavioral_rule(b2), profile),
                 "behavioral_to_mixed is outcome-equivalent");
        int q = 0;
        while (q < g.num_players() && ++profile[q] == counts[q]) profile[q++] = 0;
        if (q == g.num_players()) break;
      }
      c.Expect(Sum(m2.weights) == 1, "mixed weights sum to 1");
    }
  }
  c.Expect(trees >= 100, "at least 100 trees");
  return c;
}

Check RectangularImpliesConsistency() {
  Check c;
  std::mt19937_64 rng(4242);
  const GameTree g = testing::TwoPlayerGameWithFreePayoffs();
  int judged = 0;
  for (int i = 0; i < 150; ++i) {
    std::vector<Rational> os, deltas;
    for (int k = std::uniform_int_distribution<int>(1, 3)(rng); k > 0; --k) {
      Rational o = testing::RandomRational(rng, 0, 1, 9);
      if (o == 1) o = Rational(1, 2);
      os.push_back(o);
    }
    for (int k = std::uniform_int_distribution<int>(1, 3)(rng); k > 0; --k) {
      deltas.push_back(testing::RandomRational(rng, 0, 1, 9));
    }
    const CredalSet beliefs = testing::ComposeRectangular(os, deltas);
    Bindings b;
    for (const auto& s : testing::FreePayoffSlots()) {
      b[s] = testing::RandomRational(rng, -20, 20, 5);
    }
    const PlayerProblem pp = BuildPlayerProblem(g, 1, beliefs, b);
    c.Expect(CheckRectangular(beliefs, pp.filtration).rectangular, "composition is rectangular");
    const ConsistencyReport r = CheckDynamicConsistency(pp);
    for (const auto& cell : r.cells) {
      c.Expect(cell.verdict != Verdict::kInconsistent, "never Inconsistent");
      judged += cell.verdict == Verdict::kConsistent;
    }
    c.Expect(!OracleInconsistent(pp.exante.payoff(), beliefs.vertices(), {0, 1}),
             "envelope oracle agrees");
  }
  c.Expect(judged >= 100, "at least 100 judged cells");
  return c;
}

}  // namespace
}  // namespace ambigame

int main() {
  using ambigame::Check;
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"two-player ex-ante optimum m = 1 at eps 1/4 and 1/50", ambigame::ExAnteOptimum},
      {"two-player conditional optimum m = 1/102, value 100 + 1/102", ambigame::ConditionalOptimum},
      {"threshold: Inconsistent exactly for eps > 1/102", ambigame::Threshold},
      {"rectangular hull vertices, witness, idempotence", ambigame::RectHull},
      {"hulled beliefs restore consistency at m = 1/102", ambigame::ConsistencyRestored},
      {"three-player induction A'..D' with ratios 3/8 and 1/6", ambigame::Induction},
      {"induced set not rectangular, witness verified", ambigame::NonRectangular},
      {"payoff grid search finds a confirmed violation", ambigame::CounterexamplePayoffs},
      {"Kuhn round-trips on random perfect-recall trees", ambigame::Kuhn},
      {"rectangular beliefs never Inconsistent", ambigame::RectangularImpliesConsistency},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s%s\n", c.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), c.Summary().c_str());
    failed += !c.ok();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
