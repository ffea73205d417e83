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

#include "ambigame/json_io.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "ambigame/errors.h"

namespace ambigame {
namespace {

bool IsIdentifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string TypeName(const Json& j) { return j.type_name(); }

}  // namespace

void SchemaProblems::ThrowIfAny() const {
  if (!problems_.empty()) throw SchemaError(problems_);
}

bool SchemaProblems::ExpectObject(const Json& j, const std::string& path) {
  if (j.is_object()) return true;
  Add(path, "expected an object, found " + TypeName(j));
  return false;
}

bool SchemaProblems::ExpectArray(const Json& j, const std::string& path) {
  if (j.is_array()) return true;
  Add(path, "expected an array, found " + TypeName(j));
  return false;
}

bool SchemaProblems::ExpectString(const Json& j, const std::string& path) {
  if (j.is_string()) return true;
  Add(path, "expected a string, found " + TypeName(j));
  return false;
}

void SchemaProblems::RejectUnknownKeys(const Json& j, const std::string& path,
                                       const std::vector<std::string>& allowed) {
  if (!j.is_object()) return;
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      Add(JoinPath(path, item.key()), "unknown key");
    }
  }
}

bool SchemaProblems::Require(const Json& j, const std::string& path,
                             const std::string& key) {
  if (j.is_object() && j.contains(key)) return true;
  Add(JoinPath(path, key), "required key is missing");
  return false;
}

std::optional<Rational> SchemaProblems::ReadRational(const Json& j,
                                                     const std::string& path) {
  if (j.is_number_integer()) {
    return Rational(Integer(j.dump()));
  }
  if (j.is_number_float()) {
    Add(path, "decimal number " + j.dump() +
                  " is not exact; write a rational string such as \"1/102\"");
    return std::nullopt;
  }
  if (!j.is_string()) {
    Add(path, "expected a rational string \"p/q\", found " + TypeName(j));
    return std::nullopt;
  }
  auto r = TryParseRational(j.get<std::string>());
  if (!r) {
    Add(path, "'" + j.get<std::string>() + "' is not an exact rational \"p/q\"");
  }
  return r;
}

std::optional<Vector> SchemaProblems::ReadVector(const Json& j,
                                                 const std::string& path) {
  if (!ExpectArray(j, path)) return std::nullopt;
  Vector v;
  bool ok = true;
  for (size_t i = 0; i < j.size(); ++i) {
    auto r = ReadRational(j[i], JoinPath(path, i));
    ok = ok && r.has_value();
    if (r) v.push_back(*r);
  }
  if (!ok) return std::nullopt;
  return v;
}

std::optional<std::vector<std::string>> SchemaProblems::ReadStrings(
    const Json& j, const std::string& path) {
  if (!ExpectArray(j, path)) return std::nullopt;
  std::vector<std::string> out;
  bool ok = true;
  for (size_t i = 0; i < j.size(); ++i) {
    if (ExpectString(j[i], JoinPath(path, i))) {
      out.push_back(j[i].get<std::string>());
    } else {
      ok = false;
    }
  }
  if (!ok) return std::nullopt;
  return out;
}

std::string JoinPath(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

std::string JoinPath(const std::string& base, size_t index) {
  return (base.empty() ? std::string("$") : base) + "[" +
         std::to_string(index) + "]";
}

// ---------------------------------------------------------------------------

Json ToJson(const Rational& r) { return ToString(r); }

Json ToJson(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(ToString(x));
  return out;
}

Json ToJson(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(ToJson(v));
  return out;
}

Rational RationalFromJson(const Json& j) {
  SchemaProblems problems;
  auto r = problems.ReadRational(j, "");
  problems.ThrowIfAny();
  return *r;
}

Vector VectorFromJson(const Json& j) {
  SchemaProblems problems;
  auto v = problems.ReadVector(j, "");
  problems.ThrowIfAny();
  return *v;
}

// ---------------------------------------------------------------------------

Json GameToJson(const GameTree& game) {
  std::function<Json(int)> node_json = [&](int id) {
    const auto& node = game.node(id);
    Json out = Json::object();
    if (node.is_terminal()) {
      Json payoffs = Json::array();
      for (const auto& term : node.payoffs) {
        payoffs.push_back(term.parameter ? *term.parameter
                                         : ToString(term.constant));
      }
      out["payoffs"] = payoffs;
      return out;
    }
    out["player"] = game.players()[node.player];
    Json actions = Json::array();
    for (size_t a = 0; a < node.actions.size(); ++a) {
      actions.push_back({{"label", node.actions[a]},
                         {"child", node_json(node.children[a])}});
    }
    out["actions"] = actions;
    return out;
  };
  Json sets = Json::array();
  for (const auto& set : game.information_sets()) {
    if (set.nodes.size() < 2) continue;
    Json paths = Json::array();
    for (int n : set.nodes) paths.push_back(game.PathOf(n));
    sets.push_back(paths);
  }
  Json parameters = Json::object();
  for (const auto& [name, value] : game.parameters()) {
    parameters[name] = ToString(value);
  }
  return {{"players", game.players()},
          {"root", node_json(0)},
          {"information_sets", sets},
          {"parameters", parameters}};
}

namespace {

std::optional<NodeSpec> ParseNode(const Json& j, const std::string& path,
                                  SchemaProblems& problems) {
  if (!problems.ExpectObject(j, path)) return std::nullopt;
  NodeSpec spec;
  if (j.contains("payoffs")) {
    problems.RejectUnknownKeys(j, path, {"payoffs"});
    const std::string ppath = JoinPath(path, "payoffs");
    if (!problems.ExpectArray(j["payoffs"], ppath)) return std::nullopt;
    bool ok = true;
    for (size_t i = 0; i < j["payoffs"].size(); ++i) {
      const Json& e = j["payoffs"][i];
      const std::string epath = JoinPath(ppath, i);
      if (e.is_number_integer()) {
        spec.payoffs.push_back(e.dump());
      } else if (e.is_string() && (TryParseRational(e.get<std::string>()) ||
                                   IsIdentifier(e.get<std::string>()))) {
        spec.payoffs.push_back(e.get<std::string>());
      } else {
        problems.Add(epath,
                     "payoff must be a rational string or a parameter name");
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return spec;
  }
  if (!j.contains("actions")) {
    problems.Add(path, "node needs either \"actions\" or \"payoffs\"");
    return std::nullopt;
  }
  problems.RejectUnknownKeys(j, path, {"player", "actions"});
  bool ok = true;
  if (problems.Require(j, path, "player") &&
      problems.ExpectString(j["player"], JoinPath(path, "player"))) {
    spec.player = j["player"].get<std::string>();
  } else {
    ok = false;
  }
  const std::string apath = JoinPath(path, "actions");
  if (!problems.ExpectArray(j["actions"], apath)) return std::nullopt;
  if (j["actions"].empty()) {
    problems.Add(apath, "a decision node needs at least one action");
    ok = false;
  }
  for (size_t i = 0; i < j["actions"].size(); ++i) {
    const Json& a = j["actions"][i];
    const std::string path_i = JoinPath(apath, i);
    if (!problems.ExpectObject(a, path_i)) {
      ok = false;
      continue;
    }
    problems.RejectUnknownKeys(a, path_i, {"label", "child"});
    ActionSpec action;
    if (problems.Require(a, path_i, "label") &&
        problems.ExpectString(a["label"], JoinPath(path_i, "label"))) {
      action.label = a["label"].get<std::string>();
    } else {
      ok = false;
    }
    if (problems.Require(a, path_i, "child")) {
      auto child = ParseNode(a["child"], JoinPath(path_i, "child"), problems);
      if (child) {
        action.child = std::move(*child);
      } else {
        ok = false;
      }
    } else {
      ok = false;
    }
    spec.actions.push_back(std::move(action));
  }
  if (!ok) return std::nullopt;
  return spec;
}

}  // namespace

std::optional<GameTree> ParseGame(const Json& j, const std::string& path,
                                  SchemaProblems& problems) {
  if (!problems.ExpectObject(j, path)) return std::nullopt;
  const size_t before = problems.list().size();
  problems.RejectUnknownKeys(
      j, path, {"players", "root", "information_sets", "parameters"});
  std::optional<std::vector<std::string>> players;
  if (problems.Require(j, path, "players")) {
    players = problems.ReadStrings(j["players"], JoinPath(path, "players"));
  }
  std::optional<NodeSpec> root;
  if (problems.Require(j, path, "root")) {
    root = ParseNode(j["root"], JoinPath(path, "root"), problems);
  }
  std::vector<std::vector<NodePath>> sets;
  if (j.contains("information_sets")) {
    const std::string spath = JoinPath(path, "information_sets");
    if (problems.ExpectArray(j["information_sets"], spath)) {
      for (size_t i = 0; i < j["information_sets"].size(); ++i) {
        const Json& set = j["information_sets"][i];
        const std::string path_i = JoinPath(spath, i);
        if (!problems.ExpectArray(set, path_i)) continue;
        std::vector<NodePath> paths;
        for (size_t k = 0; k < set.size(); ++k) {
          if (auto p = problems.ReadStrings(set[k], JoinPath(path_i, k))) {
            paths.push_back(*p);
          }
        }
        sets.push_back(std::move(paths));
      }
    }
  }
  Bindings parameters;
  if (j.contains("parameters")) {
    const std::string ppath = JoinPath(path, "parameters");
    if (problems.ExpectObject(j["parameters"], ppath)) {
      for (const auto& item : j["parameters"].items()) {
        const std::string kpath = JoinPath(ppath, item.key());
        if (!IsIdentifier(item.key())) {
          problems.Add(kpath, "parameter names must be identifiers");
        }
        if (auto r = problems.ReadRational(item.value(), kpath)) {
          parameters[item.key()] = *r;
        }
      }
    }
  }
  if (problems.list().size() != before || !players || !root) return std::nullopt;
  try {
    return GameTree(*players, *root, sets, parameters);
  } catch (const MalformedGame& e) {
    problems.Add(path, e.what());
    return std::nullopt;
  }
}

GameTree GameFromJson(const Json& j) {
  SchemaProblems problems;
  auto game = ParseGame(j, "", problems);
  problems.ThrowIfAny();
  return std::move(*game);
}

// ---------------------------------------------------------------------------

Json CredalSetToJson(const CredalSet& c) {
  return {{"states", c.space().labels()}, {"vertices", ToJson(c.vertices())}};
}

std::optional<CredalSet> ParseCredalSet(const Json& j, const std::string& path,
                                        SchemaProblems& problems) {
  if (!problems.ExpectObject(j, path)) return std::nullopt;
  const size_t before = problems.list().size();
  problems.RejectUnknownKeys(j, path, {"states", "vertices"});
  std::optional<std::vector<std::string>> states;
  if (problems.Require(j, path, "states")) {
    states = problems.ReadStrings(j["states"], JoinPath(path, "states"));
    if (states && states->empty()) {
      problems.Add(JoinPath(path, "states"), "at least one state is required");
    }
    if (states && std::set<std::string>(states->begin(), states->end()).size() !=
                      states->size()) {
      problems.Add(JoinPath(path, "states"), "state labels must be unique");
    }
  }
  std::vector<Vector> vertices;
  if (problems.Require(j, path, "vertices")) {
    const std::string vpath = JoinPath(path, "vertices");
    if (problems.ExpectArray(j["vertices"], vpath)) {
      if (j["vertices"].empty()) problems.Add(vpath, "at least one vertex is required");
      for (size_t i = 0; i < j["vertices"].size(); ++i) {
        const std::string path_i = JoinPath(vpath, i);
        auto v = problems.ReadVector(j["vertices"][i], path_i);
        if (!v) continue;
        if (states && v->size() != states->size()) {
          problems.Add(path_i, "vertex " + std::to_string(i) + " has " +
                                   std::to_string(v->size()) + " entries for " +
                                   std::to_string(states->size()) + " states");
        } else if (!IsProbabilityVector(*v)) {
          problems.Add(path_i, "vertex " + std::to_string(i) +
                                   " is not a probability vector (entries sum to " +
                                   ToString(Sum(*v)) + ")");
        }
        vertices.push_back(std::move(*v));
      }
    }
  }
  if (problems.list().size() != before || !states) return std::nullopt;
  return CredalSet(StateSpace(*states), std::move(vertices));
}

CredalSet CredalSetFromJson(const Json& j) {
  SchemaProblems problems;
  auto c = ParseCredalSet(j, "", problems);
  problems.ThrowIfAny();
  return std::move(*c);
}

Json FiltrationToJson(const Filtration& f) {
  Json stages = Json::array();
  for (const auto& partition : f.stages()) {
    Json cells = Json::array();
    for (const auto& cell : partition) {
      Json labels = Json::array();
      for (int s : cell) labels.push_back(f.space().label(s));
      cells.push_back(labels);
    }
    stages.push_back(cells);
  }
  return {{"states", f.space().labels()}, {"stages", stages}};
}

Filtration FiltrationFromJson(const Json& j,
                              const std::optional<StateSpace>& space) {
  SchemaProblems problems;
  problems.ExpectObject(j, "");
  problems.RejectUnknownKeys(j, "", {"states", "stages"});
  std::optional<StateSpace> states = space;
  if (j.is_object() && j.contains("states")) {
    if (auto s = problems.ReadStrings(j["states"], "states")) states.emplace(*s);
  } else if (!space) {
    problems.Add("states", "required key is missing");
  }
  std::vector<std::vector<std::vector<std::string>>> stages;
  if (problems.Require(j, "", "stages") &&
      problems.ExpectArray(j["stages"], "stages")) {
    for (size_t t = 0; t < j["stages"].size(); ++t) {
      const std::string tpath = JoinPath("stages", t);
      if (!problems.ExpectArray(j["stages"][t], tpath)) continue;
      std::vector<std::vector<std::string>> cells;
      for (size_t c = 0; c < j["stages"][t].size(); ++c) {
        if (auto s = problems.ReadStrings(j["stages"][t][c], JoinPath(tpath, c))) {
          cells.push_back(*s);
        }
      }
      stages.push_back(std::move(cells));
    }
  }
  problems.ThrowIfAny();
  try {
    return Filtration::FromLabels(*states, stages);
  } catch (const InvalidArgument& e) {
    throw SchemaError({std::string("stages: ") + e.what()});
  }
}

// ---------------------------------------------------------------------------

Json MaxminSolutionToJson(const MaxminSolution& s) {
  return {{"value", ToString(s.value)},
          {"strategy", ToJson(s.strategy)},
          {"optimal_face", ToJson(s.optimal_face.vertices())},
          {"binding_vertices", ToJson(s.binding_vertices)}};
}

MaxminSolution MaxminSolutionFromJson(const Json& j) {
  SchemaProblems problems;
  problems.ExpectObject(j, "");
  problems.RejectUnknownKeys(
      j, "", {"value", "strategy", "optimal_face", "binding_vertices"});
  for (const char* key : {"value", "strategy", "optimal_face", "binding_vertices"}) {
    problems.Require(j, "", key);
  }
  problems.ThrowIfAny();
  auto value = problems.ReadRational(j["value"], "value");
  auto strategy = problems.ReadVector(j["strategy"], "strategy");
  std::vector<Vector> face, binding;
  for (auto [key, out] : {std::pair{"optimal_face", &face},
                          std::pair{"binding_vertices", &binding}}) {
    if (!problems.ExpectArray(j[key], key)) continue;
    for (size_t i = 0; i < j[key].size(); ++i) {
      if (auto v = problems.ReadVector(j[key][i], JoinPath(key, i))) {
        out->push_back(*v);
      }
    }
  }
  problems.ThrowIfAny();
  if (face.empty()) throw SchemaError({"optimal_face: must not be empty"});
  return MaxminSolution{*value, *strategy,
                        Polytope(static_cast<int>(strategy->size()), face),
                        binding};
}

Json ConsistencyReportToJson(const ConsistencyReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json cell = {{"cell_index", c.cell_index},
                 {"cell", c.cell_name},
                 {"verdict", VerdictName(c.verdict)}};
    if (c.conditional) cell["conditional"] = MaxminSolutionToJson(*c.conditional);
    if (c.restricted) cell["restricted"] = MaxminSolutionToJson(*c.restricted);
    if (c.value_gap) cell["value_gap"] = ToString(*c.value_gap);
    if (!c.note.empty()) cell["note"] = c.note;
    cells.push_back(cell);
  }
  return {{"consistent", r.consistent},
          {"exante", MaxminSolutionToJson(r.exante)},
          {"cells", cells}};
}

ConsistencyReport ConsistencyReportFromJson(const Json& j) {
  SchemaProblems problems;
  problems.ExpectObject(j, "");
  problems.RejectUnknownKeys(j, "", {"consistent", "exante", "cells"});
  for (const char* key : {"consistent", "exante", "cells"}) {
    problems.Require(j, "", key);
  }
  problems.ThrowIfAny();
  if (!j["consistent"].is_boolean()) problems.Add("consistent", "expected a boolean");
  problems.ExpectArray(j["cells"], "cells");
  problems.ThrowIfAny();
  ConsistencyReport report{MaxminSolutionFromJson(j["exante"]), {},
                           j["consistent"].get<bool>()};
  for (size_t i = 0; i < j["cells"].size(); ++i) {
    const Json& c = j["cells"][i];
    const std::string path = JoinPath("cells", i);
    if (!problems.ExpectObject(c, path)) continue;
    problems.RejectUnknownKeys(c, path,
                               {"cell_index", "cell", "verdict", "conditional",
                                "restricted", "value_gap", "note"});
    CellVerdict v;
    if (problems.Require(c, path, "cell_index") && c["cell_index"].is_number_integer()) {
      v.cell_index = c["cell_index"].get<int>();
    }
    if (problems.Require(c, path, "cell") &&
        problems.ExpectString(c["cell"], JoinPath(path, "cell"))) {
      v.cell_name = c["cell"].get<std::string>();
    }
    if (problems.Require(c, path, "verdict") &&
        problems.ExpectString(c["verdict"], JoinPath(path, "verdict"))) {
      const std::string name = c["verdict"].get<std::string>();
      bool known = false;
      for (Verdict candidate : {Verdict::kConsistent, Verdict::kInconsistent,
                                Verdict::kUnreachable}) {
        if (VerdictName(candidate) == name) {
          v.verdict = candidate;
          known = true;
        }
      }
      if (!known) problems.Add(JoinPath(path, "verdict"), "unknown verdict '" + name + "'");
    }
    if (c.contains("conditional")) v.conditional = MaxminSolutionFromJson(c["conditional"]);
    if (c.contains("restricted")) v.restricted = MaxminSolutionFromJson(c["restricted"]);
    if (c.contains("value_gap")) {
      v.value_gap = problems.ReadRational(c["value_gap"], JoinPath(path, "value_gap"));
    }
    if (c.contains("note") && problems.ExpectString(c["note"], JoinPath(path, "note"))) {
      v.note = c["note"].get<std::string>();
    }
    report.cells.push_back(std::move(v));
  }
  problems.ThrowIfAny();
  return report;
}

Json BindingsToJson(const Bindings& b) {
  Json out = Json::object();
  for (const auto& [name, value] : b) out[name] = ToString(value);
  return out;
}

}  // namespace ambigame
