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

#include "ambigame/cli.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ambigame/errors.h"
#include "ambigame/json_io.h"
#include "ambigame/svg.h"

namespace ambigame {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string command;
  std::string scenario;
  std::string eps;
  std::string n_interval;
  std::string grid;
  std::optional<std::string> eps_list;
  std::string grid_kind = "reciprocal";
  int grid_denominator = 1000;
  std::string axes;
  std::string out;
  bool rectangularize = false;
  bool check_dc = false;
  bool json = false;
  bool bisect = false;
};

// One analysis' contribution to the report.
struct Section {
  Json json;
  std::string text;
};

Rational ParseFlagRational(const std::string& flag, const std::string& text) {
  auto r = TryParseRational(text);
  if (!r) {
    throw UsageError(flag + " expects an exact rational such as 1/102, got '" +
                     text + "'");
  }
  return *r;
}

std::vector<Rational> ParseFlagList(const std::string& flag,
                                    const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty()) continue;
    out.push_back(ParseFlagRational(flag, item));
  }
  return out;
}

std::string Approx(const Rational& r) {
  if (denominator(r) == 1) return ToString(r);
  return ToString(r) + " (≈" + ToDecimalString(r) + ")";
}

std::string StrategyText(const std::vector<std::string>& actions,
                         const Vector& strategy) {
  std::string out;
  for (size_t i = 0; i < actions.size(); ++i) {
    if (i > 0) out += ", ";
    out += actions[i] + "=" + ToString(strategy[i]);
  }
  return out;
}

std::string VerticesText(const std::vector<Vector>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += " ";
    out += ToString(vs[i]);
  }
  return out;
}

std::string OverallVerdict(const ConsistencyReport& r) {
  return r.consistent ? VerdictName(Verdict::kConsistent)
                      : VerdictName(Verdict::kInconsistent);
}

std::string SolutionText(const std::string& indent,
                         const std::vector<std::string>& actions,
                         const MaxminSolution& s) {
  std::ostringstream out;
  out << indent << "value: " << Approx(s.value) << "\n";
  out << indent << "strategy: " << StrategyText(actions, s.strategy) << "\n";
  out << indent << "optimal face: " << VerticesText(s.optimal_face.vertices())
      << "\n";
  out << indent << "worst-case priors: " << VerticesText(s.binding_vertices)
      << "\n";
  return out.str();
}

// --- analyses ----------------------------------------------------------------

class Analyzer {
 public:
  explicit Analyzer(const Scenario& s) : s_(s) {}

  Section Run(const std::string& name) {
    if (name == "maxmin") return Maxmin();
    if (name == "update") return Update();
    if (name == "rect-hull") return RectHull();
    if (name == "check-rect") return CheckRect();
    if (name == "check-dc") return CheckDc();
    if (name == "induce") return Induce();
    if (name == "find-payoffs") return FindPayoffs();
    throw UsageError("unknown analysis '" + name + "'");
  }

 private:
  const PlayerProblem& Problem() {
    if (!pp_) pp_ = ScenarioProblem(s_);
    return *pp_;
  }

  std::string Header(const std::string& name) const {
    return "[" + name + "] player " + s_.player_name() + "\n";
  }

  Section Maxmin() {
    const PlayerProblem& pp = Problem();
    const MaxminSolution sol = SolveMaxmin(pp.exante);
    Section out;
    out.json = {{"analysis", "maxmin"},
                {"actions", pp.exante.actions()},
                {"beliefs", CredalSetToJson(pp.exante.beliefs())},
                {"solution", MaxminSolutionToJson(sol)}};
    out.text = Header("maxmin") + "  ex-ante problem over states " +
               Json(pp.exante.space().labels()).dump() + "\n" +
               SolutionText("  ", pp.exante.actions(), sol);
    return out;
  }

  Section Update() {
    const PlayerProblem& pp = Problem();
    const CredalSet& beliefs = pp.exante.beliefs();
    Section out;
    out.text = Header("update");
    Json cells = Json::array();
    for (const Cell& cell : pp.filtration.stages().front()) {
      const std::string name = CellName(beliefs.space(), cell);
      try {
        const CredalSet posterior = FullBayesUpdate(beliefs, cell);
        cells.push_back({{"cell", name}, {"posterior", CredalSetToJson(posterior)}});
        out.text += "  " + name + ": " + VerticesText(posterior.vertices()) + "\n";
      } catch (const ZeroProbabilityReach& e) {
        cells.push_back({{"cell", name}, {"unreachable", e.what()}});
        out.text += "  " + name + ": not updated (" + e.what() + ")\n";
      }
    }
    out.json = {{"analysis", "update"}, {"cells", cells}};
    return out;
  }

  Section RectHull() {
    const PlayerProblem& pp = Problem();
    const CredalSet& beliefs = pp.exante.beliefs();
    const CredalSet hull = RectangularHull(beliefs, pp.filtration);
    std::vector<Vector> added;
    for (const auto& v : hull.vertices()) {
      if (!beliefs.Contains(v)) added.push_back(v);
    }
    Section out;
    out.json = {{"analysis", "rect-hull"},
                {"filtration", FiltrationToJson(pp.filtration)},
                {"beliefs", CredalSetToJson(beliefs)},
                {"hull", CredalSetToJson(hull)},
                {"added", ToJson(added)}};
    out.text = Header("rect-hull") +
               "  beliefs: " + VerticesText(beliefs.vertices()) + "\n" +
               "  rectangular hull: " + VerticesText(hull.vertices()) + "\n" +
               "  new vertices: " + (added.empty() ? "none" : VerticesText(added)) +
               "\n";
    return out;
  }

  Section CheckRect() {
    const PlayerProblem& pp = Problem();
    const RectangularityResult r =
        CheckRectangular(pp.exante.beliefs(), pp.filtration);
    Section out;
    out.json = {{"analysis", "check-rect"},
                {"filtration", FiltrationToJson(pp.filtration)},
                {"rectangular", r.rectangular},
                {"witness", r.witness ? ToJson(*r.witness) : Json(nullptr)}};
    out.text = Header("check-rect") + "  rectangular: " +
               (r.rectangular ? "yes" : "no") + "\n";
    if (r.witness) {
      out.text += "  witness (in the hull, not in the set): " +
                  ToString(*r.witness) + "\n";
    }
    return out;
  }

  Section CheckDc() {
    const PlayerProblem& pp = Problem();
    const ConsistencyReport rep = CheckDynamicConsistency(pp);
    const auto& actions = pp.exante.actions();
    Section out;
    out.json = {{"analysis", "check-dc"},
                {"actions", actions},
                {"verdict", OverallVerdict(rep)},
                {"report", ConsistencyReportToJson(rep)}};
    std::ostringstream text;
    text << Header("check-dc");
    text << "  ex ante:\n" << SolutionText("    ", actions, rep.exante);
    for (const auto& c : rep.cells) {
      text << "  cell " << c.cell_name << ": " << VerdictName(c.verdict) << "\n";
      if (c.conditional) {
        text << "    conditional optimum:\n"
             << SolutionText("      ", actions, *c.conditional);
      }
      if (c.restricted) {
        text << "    best over the ex-ante optimal face: value "
             << Approx(c.restricted->value) << ", strategy "
             << StrategyText(actions, c.restricted->strategy) << "\n";
      }
      if (!c.note.empty()) text << "    " << c.note << "\n";
    }
    text << "  verdict: " << OverallVerdict(rep) << "\n";
    out.text = text.str();
    return out;
  }

  Section Induce() {
    const BeliefSpec& spec = s_.player_beliefs();
    if (spec.kind != BeliefSpec::Kind::kInduced) {
      throw InvalidArgument("induce needs beliefs given by \"induced_from\"");
    }
    const CredalSet upstream = ResolveBeliefs(*spec.upstream);
    const CredalSet induced = ResolveBeliefs(spec);
    const std::vector<std::string> up_labels = VertexLabels(*spec.upstream);
    const std::vector<std::string> labels = VertexLabels(spec);
    const std::string ratio_name = spec.states[1] + "/(" + spec.states[0] + "+" +
                                   spec.states[1] + ")";
    Json images = Json::array();
    for (int k = 0; k < upstream.num_vertices(); ++k) {
      for (const Rational& n : {spec.n_low, spec.n_high}) {
        images.push_back({{"source", ToJson(upstream.vertices()[k])},
                          {"source_label", up_labels[k]},
                          {"n", ToString(n)},
                          {"image", ToJson(InducedPrior(upstream.vertices()[k], n))}});
      }
    }
    Json vertices = Json::array();
    std::ostringstream text;
    text << Header("induce") << "  upstream: " << VerticesText(upstream.vertices())
         << "\n  n in [" << ToString(spec.n_low) << ", " << ToString(spec.n_high)
         << "]\n  induced vertices over " << Json(spec.states).dump() << ":\n";
    for (int i = 0; i < induced.num_vertices(); ++i) {
      const Vector& v = induced.vertices()[i];
      const Rational first_two = v[0] + v[1];
      Json ratio = nullptr;
      std::string ratio_text = "undefined";
      if (first_two != 0) {
        ratio = ToString(v[1] / first_two);
        ratio_text = ToString(Rational(v[1] / first_two));
      }
      vertices.push_back({{"label", labels[i]}, {"point", ToJson(v)}, {"ratio", ratio}});
      text << "    " << (labels[i].empty() ? "-" : labels[i]) << " " << ToString(v)
           << "  " << ratio_name << " = " << ratio_text << "\n";
    }
    Section out;
    out.json = {{"analysis", "induce"},
                {"upstream", CredalSetToJson(upstream)},
                {"upstream_labels", up_labels},
                {"n_interval", {ToString(spec.n_low), ToString(spec.n_high)}},
                {"images", images},
                {"induced", CredalSetToJson(induced)},
                {"ratio", ratio_name},
                {"vertices", vertices}};
    out.text = text.str();
    return out;
  }

  Section FindPayoffs() {
    if (!s_.payoff_search) {
      throw InvalidArgument("find-payoffs needs a \"payoff_search\" section");
    }
    const PlayerProblem& pp = Problem();
    const auto& search = *s_.payoff_search;
    const StateGroups& groups = s_.player_beliefs().groups;
    const PayoffSearch result =
        FindDcViolationPayoffs(*s_.game, s_.player, pp.exante.beliefs(),
                               search.grid, search.slots, s_.bindings, groups);
    Json grid = Json::array();
    for (const auto& g : search.grid) grid.push_back(ToString(g));
    Section out;
    out.json = {{"analysis", "find-payoffs"},
                {"slots", search.slots},
                {"grid", grid},
                {"assignments_checked", result.assignments_checked},
                {"found", result.violation.has_value()}};
    std::ostringstream text;
    text << Header("find-payoffs") << "  slots: " << Json(search.slots).dump()
         << "\n  grid: " << grid.dump() << "\n  assignments checked: "
         << result.assignments_checked << "\n";
    if (result.violation) {
      // Re-check the assignment from scratch.
      Bindings all = s_.bindings;
      for (const auto& [k, v] : result.violation->payoffs) all[k] = v;
      const PlayerProblem again = BuildPlayerProblem(
          *s_.game, s_.player, pp.exante.beliefs(), all, groups);
      const ConsistencyReport confirm = CheckDynamicConsistency(again);
      out.json["payoffs"] = BindingsToJson(result.violation->payoffs);
      out.json["report"] = ConsistencyReportToJson(result.violation->report);
      out.json["confirmed"] = !confirm.consistent;
      text << "  violation:";
      for (const auto& [k, v] : result.violation->payoffs) {
        text << " " << k << "=" << ToString(v);
      }
      text << "\n  independent re-check: " << OverallVerdict(confirm) << "\n";
      for (const auto& c : result.violation->report.cells) {
        text << "  cell " << c.cell_name << ": " << VerdictName(c.verdict) << "\n";
      }
    } else {
      text << "  no assignment in the grid violates dynamic consistency\n";
    }
    out.text = text.str();
    return out;
  }

  const Scenario& s_;
  std::optional<PlayerProblem> pp_;
};

// --- report assembly -----------------------------------------------------------

Json ReportJson(const Options& o, const Scenario& s, Json settings,
                Json results) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", o.command},
          {"scenario", {{"name", s.name}, {"hash", s.hash}}},
          {"settings", std::move(settings)},
          {"results", std::move(results)}};
}

Json Settings(const Scenario& s) {
  Json out = {{"player", s.player_name()}, {"rectangularize", s.rectangularize}};
  const BeliefSpec& spec = s.player_beliefs();
  if (spec.kind == BeliefSpec::Kind::kContamination) out["eps"] = ToString(spec.eps);
  if (spec.kind == BeliefSpec::Kind::kInduced) {
    out["n_interval"] = {ToString(spec.n_low), ToString(spec.n_high)};
  }
  if (s.payoff_search) {
    Json grid = Json::array();
    for (const auto& g : s.payoff_search->grid) grid.push_back(ToString(g));
    out["grid"] = grid;
  }
  if (!s.bindings.empty()) out["bindings"] = BindingsToJson(s.bindings);
  return out;
}

std::string TextPreamble(const Scenario& s, bool show_eps = true) {
  std::string out = "scenario " + s.name + " (" + s.hash + ")";
  const BeliefSpec& spec = s.player_beliefs();
  if (show_eps && spec.kind == BeliefSpec::Kind::kContamination) {
    out += ", eps = " + ToString(spec.eps);
  }
  if (s.rectangularize) out += ", beliefs rectangularized";
  return out + "\n";
}

void Emit(const Options& o, const std::string& content, std::ostream& out) {
  if (o.out.empty()) {
    out << content;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file || !(file << content) || !file.flush()) {
    throw IoError("cannot write '" + o.out + "'");
  }
}

// --- overrides -------------------------------------------------------------

void ApplyOverrides(const Options& o, Scenario& s) {
  if (!o.eps.empty()) s = WithEps(s, ParseFlagRational("--eps", o.eps));
  if (o.rectangularize) s.rectangularize = true;
  if (!o.n_interval.empty()) {
    const auto n = ParseFlagList("--n-interval", o.n_interval);
    if (n.size() != 2 || !(0 <= n[0] && n[0] <= n[1] && n[1] <= 1)) {
      throw UsageError("--n-interval expects low,high with 0 <= low <= high <= 1");
    }
    BeliefSpec& spec = s.beliefs.at(s.player_name());
    if (spec.kind != BeliefSpec::Kind::kInduced) {
      throw UsageError("--n-interval applies only to induced beliefs");
    }
    spec.n_low = n[0];
    spec.n_high = n[1];
  }
  if (!o.grid.empty()) {
    if (!s.payoff_search) {
      throw UsageError("--grid needs a scenario with a payoff_search section");
    }
    s.payoff_search->grid = ParseFlagList("--grid", o.grid);
    if (s.payoff_search->grid.empty()) throw UsageError("--grid is empty");
  }
}

// --- commands ----------------------------------------------------------------

void RunAnalyses(const Options& o, const Scenario& s,
                 const std::vector<std::string>& names, std::ostream& out) {
  Analyzer analyzer(s);
  Json results = Json::array();
  std::string text = TextPreamble(s);
  for (const auto& name : names) {
    Section section = analyzer.Run(name);
    results.push_back(std::move(section.json));
    text += section.text;
  }
  Emit(o, o.json ? ReportJson(o, s, Settings(s), results).dump(2) + "\n" : text,
       out);
}

void RunValidate(const Options& o, const Scenario& s, std::ostream& out) {
  const PlayerProblem pp = ScenarioProblem(s);
  Json results = Json::array();
  results.push_back({{"analysis", "validate"},
                     {"valid", true},
                     {"players", s.game->players()},
                     {"states", pp.exante.space().labels()},
                     {"strategies", pp.exante.actions()},
                     {"filtration", FiltrationToJson(pp.filtration)}});
  std::string text = TextPreamble(s) + "valid: game with " +
                     std::to_string(s.game->num_nodes()) + " nodes, player " +
                     s.player_name() + " has " +
                     std::to_string(pp.exante.strategy_dimension()) +
                     " pure strategies over states " +
                     Json(pp.exante.space().labels()).dump() + "\n";
  Emit(o, o.json ? ReportJson(o, s, Settings(s), results).dump(2) + "\n" : text,
       out);
}

Json SweepRowJson(const Scenario& s, const SweepRow& row) {
  const PlayerProblem pp = BuildPlayerProblem(
      *s.game, s.player, ResolveBeliefs(WithEps(s, row.eps).player_beliefs()),
      s.bindings, s.player_beliefs().groups);
  Json cells = Json::array();
  for (const auto& c : row.report.cells) {
    Json cell = {{"cell", c.cell_name}, {"verdict", VerdictName(c.verdict)}};
    if (c.conditional) cell["conditional_strategy"] = ToJson(c.conditional->strategy);
    cells.push_back(cell);
  }
  return {{"eps", ToString(row.eps)},
          {"verdict", OverallVerdict(row.report)},
          {"exante_strategy", ToJson(row.report.exante.strategy)},
          {"cells", cells}};
}

void RunSweep(const Options& o, const Scenario& s, std::ostream& out) {
  if (!o.bisect && !o.eps_list) {
    throw UsageError("sweep needs --eps-list or --bisect");
  }
  WithEps(s, Rational(1, 2));  // Fails early unless beliefs are contaminations.
  const std::string head = TextPreamble(s, false) + "[sweep] player " + s.player_name() + "\n";
  if (o.bisect) {
    const std::vector<Rational> grid = EpsGrid(o.grid_kind, o.grid_denominator);
    const BisectResult r = BisectThreshold(s, grid);
    Json probes = Json::array();
    std::ostringstream text;
    text << head << "  bisection over the " << o.grid_kind << " grid with "
         << grid.size() << " points in [" << ToString(grid.front()) << ", "
         << ToString(grid.back()) << "]\n";
    for (const auto& p : r.probes) {
      probes.push_back({{"eps", ToString(p.eps)}, {"verdict", OverallVerdict(p.report)}});
      text << "  probe " << ToString(p.eps) << ": " << OverallVerdict(p.report) << "\n";
    }
    Json result = {{"analysis", "sweep-bisect"},
                   {"grid", {{"kind", o.grid_kind},
                             {"denominator", o.grid_denominator},
                             {"size", grid.size()}}},
                   {"evaluations", r.probes.size()},
                   {"probes", probes},
                   {"last_consistent", r.last_consistent ? Json(ToString(*r.last_consistent)) : Json(nullptr)},
                   {"first_inconsistent", r.first_inconsistent ? Json(ToString(*r.first_inconsistent)) : Json(nullptr)}};
    if (!r.note.empty()) {
      result["note"] = r.note;
      text << "  " << r.note << "\n";
    } else {
      text << "  threshold: Consistent up to " << ToString(*r.last_consistent)
           << ", Inconsistent from " << ToString(*r.first_inconsistent) << "\n";
    }
    Emit(o, o.json ? ReportJson(o, s, Settings(s), Json::array({result})).dump(2) + "\n"
                   : text.str(),
         out);
    return;
  }
  const std::vector<Rational> eps = ParseFlagList("--eps-list", *o.eps_list);
  for (const auto& e : eps) {
    if (e <= 0 || e >= 1) {
      throw UsageError("--eps-list values must lie strictly between 0 and 1");
    }
  }
  const std::vector<SweepRow> rows = SweepEps(s, eps, WorkerCount());
  Json table = Json::array();
  std::ostringstream text;
  text << head << "  eps            verdict\n";
  bool monotone = true;
  std::optional<Rational> last_consistent, first_inconsistent;
  for (const auto& row : rows) {
    table.push_back(SweepRowJson(s, row));
    std::string e = ToString(row.eps);
    e.resize(std::max<size_t>(e.size(), 14), ' ');
    text << "  " << e << " " << OverallVerdict(row.report) << "\n";
    if (row.report.consistent) {
      if (first_inconsistent) monotone = false;
      last_consistent = row.eps;
    } else if (!first_inconsistent) {
      first_inconsistent = row.eps;
    }
  }
  Json threshold = nullptr;
  if (monotone && last_consistent && first_inconsistent) {
    threshold = {{"last_consistent", ToString(*last_consistent)},
                 {"first_inconsistent", ToString(*first_inconsistent)}};
    text << "  threshold: Consistent up to " << ToString(*last_consistent)
         << ", Inconsistent from " << ToString(*first_inconsistent) << "\n";
  } else if (!monotone) {
    text << "  verdicts do not switch once; no threshold reported\n";
  }
  Json result = {{"analysis", "sweep"},
                 {"table", table},
                 {"monotone", monotone},
                 {"threshold", threshold}};
  Emit(o, o.json ? ReportJson(o, s, Settings(s), Json::array({result})).dump(2) + "\n"
                 : text.str(),
       out);
}

std::pair<int, int> PlotAxes(const Options& o, const StateSpace& space) {
  if (!o.axes.empty()) {
    const auto comma = o.axes.find(',');
    if (comma == std::string::npos) throw UsageError("--axes expects X,Y");
    try {
      return {space.IndexOf(o.axes.substr(0, comma)),
              space.IndexOf(o.axes.substr(comma + 1))};
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--axes: ") + e.what());
    }
  }
  if (space.size() != 3) {
    throw InvalidArgument(
        "state space not reducible to 2 plot coordinates; pick two with --axes");
  }
  return {0, 1};
}

void RunRender(const Options& o, const Scenario& s, std::ostream& out) {
  const BeliefSpec& spec = s.player_beliefs();
  std::vector<TrianglePanel> panels;
  if (spec.kind == BeliefSpec::Kind::kInduced) {
    const CredalSet up = ResolveBeliefs(*spec.upstream);
    const CredalSet induced = ResolveBeliefs(spec);
    const auto [ux, uy] = PlotAxes(o, up.space());
    const auto [ix, iy] = PlotAxes(o.axes.empty() ? o : Options{}, induced.space());
    panels.push_back({"upstream", up.space().label(ux), up.space().label(uy),
                      {ProjectCredalSet(up, ux, uy, VertexLabels(*spec.upstream))}});
    panels.push_back({"induced, n in [" + ToString(spec.n_low) + ", " +
                          ToString(spec.n_high) + "]",
                      induced.space().label(ix), induced.space().label(iy),
                      {ProjectCredalSet(induced, ix, iy, VertexLabels(spec))}});
  } else {
    const PlayerProblem pp = ScenarioProblem(s);
    const CredalSet original = ResolveBeliefs(spec);
    const CredalSet& beliefs = pp.exante.beliefs();
    const auto [x, y] = PlotAxes(o, beliefs.space());
    TrianglePanel panel{s.name, beliefs.space().label(x), beliefs.space().label(y), {}};
    if (s.rectangularize) {
      panel.title += " (rectangular hull)";
      panel.sets.push_back(ProjectCredalSet(beliefs, x, y, {}, SetStyle::kHull));
    }
    panel.sets.push_back(ProjectCredalSet(original, x, y, VertexLabels(spec)));
    for (const Cell& cell : pp.filtration.stages().front()) {
      if (cell.size() < 2) continue;
      CredalSet posterior = [&] {
        try {
          return FullBayesUpdate(beliefs, cell);
        } catch (const ZeroProbabilityReach&) {
          return CredalSet(StateSpace({"-"}), {Vector{1}});
        }
      }();
      if (posterior.space().size() != static_cast<int>(cell.size())) continue;
      PlotSet update;
      update.style = SetStyle::kUpdate;
      for (const auto& p : posterior.vertices()) {
        Vector full(beliefs.space().size(), 0);
        for (size_t i = 0; i < cell.size(); ++i) full[cell[i]] = p[i];
        update.points.push_back({full[x], full[y]});
      }
      panel.sets.push_back(update);
    }
    panels.push_back(panel);
  }
  const std::string svg = RenderTriangles(panels);
  if (o.out.empty()) {
    out << svg;
  } else {
    Emit(o, svg, out);
    out << "wrote " << o.out << "\n";
  }
}

// --- CLI parsing ---------------------------------------------------------------

void Dispatch(const Options& o, std::ostream& out) {
  Scenario s = LoadScenario(o.scenario);
  ApplyOverrides(o, s);
  if (o.command == "validate") return RunValidate(o, s, out);
  if (o.command == "sweep") return RunSweep(o, s, out);
  if (o.command == "render") return RunRender(o, s, out);
  std::vector<std::string> names;
  if (o.command == "analyze") {
    names = s.analysis.empty() ? std::vector<std::string>{"maxmin", "check-dc"}
                               : s.analysis;
    if (o.check_dc &&
        std::find(names.begin(), names.end(), "check-dc") == names.end()) {
      names.push_back("check-dc");
    }
  } else {
    names = {o.command};
  }
  RunAnalyses(o, s, names, out);
}

}  // namespace

Scenario WithEps(const Scenario& s, const Rational& eps) {
  Scenario copy = s;
  BeliefSpec& spec = copy.beliefs.at(copy.player_name());
  if (spec.kind != BeliefSpec::Kind::kContamination) {
    throw UsageError("player " + s.player_name() +
                     "'s beliefs are not an eps-contamination, so eps cannot be set");
  }
  if (eps < 0 || eps > 1) throw UsageError("eps must lie in [0, 1]");
  spec.eps = eps;
  return copy;
}

std::vector<SweepRow> SweepEps(const Scenario& s, std::vector<Rational> eps,
                               int workers) {
  std::sort(eps.begin(), eps.end());
  std::vector<std::optional<SweepRow>> rows(eps.size());
  std::vector<std::exception_ptr> errors(eps.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < eps.size();) {
      try {
        const Scenario one = WithEps(s, eps[i]);
        rows[i] = SweepRow{eps[i], CheckDynamicConsistency(ScenarioProblem(one))};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const size_t n = std::min<size_t>(std::max(workers, 1), std::max<size_t>(eps.size(), 1));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<SweepRow> out;
  for (size_t i = 0; i < eps.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*rows[i]));
  }
  return out;
}

std::vector<Rational> EpsGrid(const std::string& kind, int denominator) {
  if (denominator < 2) throw UsageError("grid denominator must be at least 2");
  std::vector<Rational> grid;
  if (kind == "reciprocal") {
    for (int k = denominator; k >= 2; --k) grid.emplace_back(1, k);
  } else if (kind == "uniform") {
    for (int i = 1; i < denominator; ++i) grid.emplace_back(i, denominator);
  } else {
    throw UsageError("grid kind must be 'reciprocal' or 'uniform'");
  }
  return grid;
}

BisectResult BisectThreshold(const Scenario& s, const std::vector<Rational>& grid) {
  BisectResult r;
  if (grid.empty()) {
    r.note = "empty grid";
    return r;
  }
  auto consistent = [&](size_t i) {
    const Scenario one = WithEps(s, grid[i]);
    r.probes.push_back({grid[i], CheckDynamicConsistency(ScenarioProblem(one))});
    return r.probes.back().report.consistent;
  };
  size_t lo = 0, hi = grid.size() - 1;
  if (!consistent(lo)) {
    r.note = "already Inconsistent at the smallest grid value";
    r.first_inconsistent = grid[lo];
    return r;
  }
  if (hi == lo || consistent(hi)) {
    r.note = "still Consistent at the largest grid value";
    r.last_consistent = grid[hi];
    return r;
  }
  while (hi - lo > 1) {
    const size_t mid = lo + (hi - lo) / 2;
    (consistent(mid) ? lo : hi) = mid;
  }
  r.last_consistent = grid[lo];
  r.first_inconsistent = grid[hi];
  return r;
}

int WorkerCount() {
  if (const char* env = std::getenv("AMBIGAME_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*env == '\0' || *end != '\0' || n <= 0 || n > 1024) {
      throw UsageError(std::string("AMBIGAME_WORKERS must be a positive integer, got '") +
                       env + "'");
    }
    return static_cast<int>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  for (const auto& name : BuiltinScenarioNames()) {
    try {
      LoadScenario(name);
    } catch (const std::exception& e) {
      err << "internal error: built-in scenario " << name
          << " is invalid: " << e.what() << "\n";
      return kExitInput;
    }
  }

  Options o;
  CLI::App app{"Exact analysis of extensive-form games with maxmin players",
               kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Check a scenario against the schema and the game"},
      {"analyze", "Run the analyses listed in the scenario"},
      {"maxmin", "Solve the ex-ante maxmin problem"},
      {"update", "Full Bayesian update on each information cell"},
      {"rect-hull", "Rectangular hull of the beliefs"},
      {"check-rect", "Decide rectangularity, with a witness"},
      {"check-dc", "Decide dynamic consistency"},
      {"induce", "Beliefs induced downstream from an n-interval"},
      {"find-payoffs", "Search a payoff grid for a consistency violation"},
      {"sweep", "Consistency verdicts across eps values"},
      {"render", "SVG drawing of the beliefs"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("scenario", o.scenario, "Scenario file or built-in name (fig1, fig4)")
        ->required();
    sub->add_option("--eps", o.eps, "Contamination level, exact (e.g. 1/102)");
    sub->add_flag("--rectangularize", o.rectangularize,
                  "Replace the beliefs by their rectangular hull first");
    sub->add_option("--out", o.out, "Write output to this file");
    if (name != "render") sub->add_flag("--json", o.json, "Emit the JSON report");
    if (name == "analyze") {
      sub->add_flag("--check-dc", o.check_dc, "Also decide dynamic consistency");
    }
    if (name == "analyze" || name == "induce" || name == "render" ||
        name == "find-payoffs" || name == "check-rect" || name == "check-dc") {
      sub->add_option("--n-interval", o.n_interval, "low,high for induced beliefs");
    }
    if (name == "analyze" || name == "find-payoffs") {
      sub->add_option("--grid", o.grid, "Comma-separated payoff grid");
    }
    if (name == "sweep") {
      sub->add_option("--eps-list", o.eps_list, "Comma-separated eps values");
      sub->add_flag("--bisect", o.bisect, "Bisect for the threshold on a grid");
      sub->add_option("--grid-kind", o.grid_kind, "reciprocal or uniform")
          ->check(CLI::IsMember({"reciprocal", "uniform"}));
      sub->add_option("--grid-denominator", o.grid_denominator,
                      "Largest denominator of the bisection grid");
    }
    if (name == "render") {
      sub->add_option("--axes", o.axes, "Two state labels to plot, X,Y");
    }
    sub->callback([&o, name = name] { o.command = name; });
  }

  std::vector<std::string> argv_storage = {kToolName};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Dispatch(o, out);
  } catch (const SchemaError& e) {
    err << "schema error in " << o.scenario << ":\n";
    for (const auto& p : e.problems()) err << "  " << p << "\n";
    return kExitInput;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "analysis error: " << e.what() << "\n";
    return kExitAnalysis;
  }
  return kExitOk;
}

}  // namespace ambigame
