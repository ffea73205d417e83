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

#include "ambigame/scenario.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ambigame/builtin.h"
#include "ambigame/errors.h"
#include "builtin_scenarios.h"

namespace ambigame {
namespace {

std::optional<StateGroups> ParseGroups(const Json& j, const std::string& path,
                                       SchemaProblems& problems) {
  if (!problems.ExpectObject(j, path)) return std::nullopt;
  StateGroups groups;
  for (const auto& item : j.items()) {
    if (auto members = problems.ReadStrings(item.value(),
                                            JoinPath(path, item.key()))) {
      if (members->empty()) {
        problems.Add(JoinPath(path, item.key()), "a group needs members");
      }
      groups[item.key()] = *members;
    }
  }
  return groups;
}

std::optional<std::vector<std::string>> ParseStates(const Json& j,
                                                    const std::string& path,
                                                    SchemaProblems& problems) {
  if (!problems.Require(j, path, "states")) return std::nullopt;
  const std::string spath = JoinPath(path, "states");
  auto states = problems.ReadStrings(j["states"], spath);
  if (!states) return std::nullopt;
  if (states->empty()) {
    problems.Add(spath, "at least one state is required");
    return std::nullopt;
  }
  if (std::set<std::string>(states->begin(), states->end()).size() !=
      states->size()) {
    problems.Add(spath, "state labels must be unique");
    return std::nullopt;
  }
  return states;
}

// Checks a probability vector over `n` states, reporting at `path`.
bool CheckDistribution(const Vector& v, size_t n, const std::string& path,
                       const std::string& what, SchemaProblems& problems) {
  if (v.size() != n) {
    problems.Add(path, what + " has " + std::to_string(v.size()) +
                           " entries for " + std::to_string(n) + " states");
    return false;
  }
  if (!IsProbabilityVector(v)) {
    problems.Add(path, what + " is not a probability vector (entries sum to " +
                           ToString(Sum(v)) + ")");
    return false;
  }
  return true;
}

std::optional<BeliefSpec> ParseBeliefSpec(const Json& j, const std::string& path,
                                          SchemaProblems& problems,
                                          bool allow_induced) {
  if (!problems.ExpectObject(j, path)) return std::nullopt;
  const size_t before = problems.list().size();
  BeliefSpec spec;
  if (j.contains("induced_from")) {
    if (!allow_induced) {
      problems.Add(JoinPath(path, "induced_from"),
                   "induced beliefs cannot be nested");
      return std::nullopt;
    }
    spec.kind = BeliefSpec::Kind::kInduced;
    problems.RejectUnknownKeys(j, path,
                               {"induced_from", "n_interval", "states", "groups"});
    auto upstream = ParseBeliefSpec(j["induced_from"],
                                    JoinPath(path, "induced_from"), problems,
                                    false);
    if (upstream && upstream->states.size() != 3) {
      problems.Add(JoinPath(path, "induced_from.states"),
                   "the upstream set must have exactly three states (l, r, o)");
    }
    if (upstream) spec.upstream = std::make_shared<BeliefSpec>(*upstream);
    if (problems.Require(j, path, "n_interval")) {
      const std::string npath = JoinPath(path, "n_interval");
      if (auto n = problems.ReadVector(j["n_interval"], npath)) {
        if (n->size() != 2) {
          problems.Add(npath, "expected [low, high]");
        } else if (!(0 <= (*n)[0] && (*n)[0] <= (*n)[1] && (*n)[1] <= 1)) {
          problems.Add(npath, "need 0 <= low <= high <= 1");
        } else {
          spec.n_low = (*n)[0];
          spec.n_high = (*n)[1];
        }
      }
    }
    if (j.contains("states")) {
      if (auto s = ParseStates(j, path, problems)) {
        if (s->size() != 3) {
          problems.Add(JoinPath(path, "states"),
                       "induced beliefs have exactly three states");
        }
        spec.states = *s;
      }
    } else {
      spec.states = {"Z", "RN", "O"};
    }
  } else if (j.contains("center") || j.contains("eps")) {
    spec.kind = BeliefSpec::Kind::kContamination;
    problems.RejectUnknownKeys(j, path, {"states", "center", "eps", "groups"});
    auto states = ParseStates(j, path, problems);
    if (problems.Require(j, path, "center")) {
      const std::string cpath = JoinPath(path, "center");
      if (auto c = problems.ReadVector(j["center"], cpath)) {
        if (states) CheckDistribution(*c, states->size(), cpath, "center", problems);
        spec.center = *c;
      }
    }
    if (problems.Require(j, path, "eps")) {
      const std::string epath = JoinPath(path, "eps");
      if (auto e = problems.ReadRational(j["eps"], epath)) {
        if (*e < 0 || *e > 1) problems.Add(epath, "eps must lie in [0, 1]");
        spec.eps = *e;
      }
    }
    if (states) spec.states = *states;
  } else {
    spec.kind = BeliefSpec::Kind::kVertices;
    problems.RejectUnknownKeys(j, path, {"states", "vertices", "labels", "groups"});
    auto states = ParseStates(j, path, problems);
    if (problems.Require(j, path, "vertices")) {
      const std::string vpath = JoinPath(path, "vertices");
      if (problems.ExpectArray(j["vertices"], vpath)) {
        if (j["vertices"].empty()) {
          problems.Add(vpath, "at least one vertex is required");
        }
        for (size_t i = 0; i < j["vertices"].size(); ++i) {
          const std::string path_i = JoinPath(vpath, i);
          if (auto v = problems.ReadVector(j["vertices"][i], path_i)) {
            if (states) {
              CheckDistribution(*v, states->size(), path_i,
                                "vertex " + std::to_string(i), problems);
            }
            spec.vertices.push_back(*v);
          }
        }
      }
    }
    if (j.contains("labels")) {
      const std::string lpath = JoinPath(path, "labels");
      if (auto labels = problems.ReadStrings(j["labels"], lpath)) {
        if (j["vertices"].is_array() && labels->size() != j["vertices"].size()) {
          problems.Add(lpath, "needs one label per vertex");
        }
        spec.labels = *labels;
      }
    }
    if (states) spec.states = *states;
  }
  if (j.contains("groups")) {
    if (auto g = ParseGroups(j["groups"], JoinPath(path, "groups"), problems)) {
      spec.groups = *g;
    }
  }
  if (problems.list().size() != before) return std::nullopt;
  return spec;
}

std::optional<std::shared_ptr<const GameTree>> ParseGameRef(
    const Json& j, const std::string& path, SchemaProblems& problems) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "two-player-example") {
      return std::make_shared<const GameTree>(TwoPlayerExampleGame());
    }
    if (name == "three-player-example") {
      return std::make_shared<const GameTree>(ThreePlayerExampleGame());
    }
    problems.Add(path, "unknown built-in game '" + name +
                           "' (known: two-player-example, three-player-example)");
    return std::nullopt;
  }
  auto game = ParseGame(j, path, problems);
  if (!game) return std::nullopt;
  if (auto v = FindPerfectRecallViolation(*game)) {
    problems.Add(path, "perfect recall fails: " + v->message);
    return std::nullopt;
  }
  return std::make_shared<const GameTree>(std::move(*game));
}

}  // namespace

CredalSet ResolveBeliefs(const BeliefSpec& spec) {
  switch (spec.kind) {
    case BeliefSpec::Kind::kVertices:
      return CredalSet(StateSpace(spec.states), spec.vertices);
    case BeliefSpec::Kind::kContamination:
      return EpsContamination(StateSpace(spec.states), spec.center, spec.eps);
    case BeliefSpec::Kind::kInduced:
      return InduceDownstream(ResolveBeliefs(*spec.upstream), spec.n_low,
                              spec.n_high, spec.states);
  }
  throw InvalidArgument("unknown belief kind");
}

std::vector<std::string> VertexLabels(const BeliefSpec& spec) {
  const CredalSet set = ResolveBeliefs(spec);
  std::vector<std::string> out(set.num_vertices());
  if (spec.kind == BeliefSpec::Kind::kVertices) {
    if (spec.labels.empty()) return out;
    for (int i = 0; i < set.num_vertices(); ++i) {
      for (size_t k = 0; k < spec.vertices.size(); ++k) {
        if (spec.vertices[k] == set.vertices()[i]) {
          out[i] = spec.labels[k];
          break;
        }
      }
    }
    return out;
  }
  if (spec.kind == BeliefSpec::Kind::kInduced) {
    const CredalSet up = ResolveBeliefs(*spec.upstream);
    const std::vector<std::string> up_labels = VertexLabels(*spec.upstream);
    for (int i = 0; i < set.num_vertices(); ++i) {
      for (int k = 0; k < up.num_vertices() && out[i].empty(); ++k) {
        if (up_labels[k].empty()) continue;
        for (const Rational& n : {spec.n_low, spec.n_high}) {
          if (InducedPrior(up.vertices()[k], n) == set.vertices()[i]) {
            out[i] = up_labels[k] + "′";
            break;
          }
        }
      }
    }
  }
  return out;
}

Scenario ScenarioFromJson(const Json& doc) {
  SchemaProblems problems;
  if (!problems.ExpectObject(doc, "")) problems.ThrowIfAny();
  problems.RejectUnknownKeys(
      doc, "", {"name", "description", "game", "player", "beliefs", "bindings",
                "payoff_search", "analysis", "rectangularize"});
  Scenario s;
  s.source = doc;
  s.hash = ScenarioHash(doc);
  if (problems.Require(doc, "", "name") && problems.ExpectString(doc["name"], "name")) {
    s.name = doc["name"].get<std::string>();
  }
  if (doc.contains("description") &&
      problems.ExpectString(doc["description"], "description")) {
    s.description = doc["description"].get<std::string>();
  }
  if (problems.Require(doc, "", "game")) {
    if (auto g = ParseGameRef(doc["game"], "game", problems)) s.game = *g;
  }
  std::string player_name;
  if (problems.Require(doc, "", "player") &&
      problems.ExpectString(doc["player"], "player")) {
    player_name = doc["player"].get<std::string>();
    if (s.game) {
      const auto& players = s.game->players();
      auto it = std::find(players.begin(), players.end(), player_name);
      if (it == players.end()) {
        problems.Add("player", "'" + player_name + "' is not a player of the game");
      } else {
        s.player = static_cast<int>(it - players.begin());
      }
    }
  }
  if (problems.Require(doc, "", "beliefs") &&
      problems.ExpectObject(doc["beliefs"], "beliefs")) {
    for (const auto& item : doc["beliefs"].items()) {
      const std::string path = JoinPath("beliefs", item.key());
      if (s.game) {
        const auto& players = s.game->players();
        if (std::find(players.begin(), players.end(), item.key()) == players.end()) {
          problems.Add(path, "'" + item.key() + "' is not a player of the game");
        }
      }
      if (auto spec = ParseBeliefSpec(item.value(), path, problems, true)) {
        s.beliefs[item.key()] = *spec;
      }
    }
    if (!player_name.empty() && !doc["beliefs"].contains(player_name)) {
      problems.Add(JoinPath("beliefs", player_name),
                   "the analyzed player needs beliefs");
    }
  }
  if (doc.contains("bindings") && problems.ExpectObject(doc["bindings"], "bindings")) {
    for (const auto& item : doc["bindings"].items()) {
      const std::string path = JoinPath("bindings", item.key());
      if (s.game && !s.game->parameters().count(item.key())) {
        problems.Add(path, "not a parameter of the game");
      }
      if (auto r = problems.ReadRational(item.value(), path)) {
        s.bindings[item.key()] = *r;
      }
    }
  }
  if (doc.contains("payoff_search")) {
    const Json& ps = doc["payoff_search"];
    if (problems.ExpectObject(ps, "payoff_search")) {
      problems.RejectUnknownKeys(ps, "payoff_search", {"slots", "grid"});
      PayoffSearchSpec spec;
      bool ok = true;
      if (problems.Require(ps, "payoff_search", "slots")) {
        if (auto slots = problems.ReadStrings(ps["slots"], "payoff_search.slots")) {
          for (size_t i = 0; i < slots->size(); ++i) {
            if (s.game && !s.game->parameters().count((*slots)[i])) {
              problems.Add(JoinPath("payoff_search.slots", i),
                           "'" + (*slots)[i] + "' is not a parameter of the game");
            }
          }
          spec.slots = *slots;
        } else {
          ok = false;
        }
      }
      if (problems.Require(ps, "payoff_search", "grid")) {
        if (auto grid = problems.ReadVector(ps["grid"], "payoff_search.grid")) {
          if (grid->empty()) problems.Add("payoff_search.grid", "must not be empty");
          spec.grid = *grid;
        } else {
          ok = false;
        }
      }
      if (ok) s.payoff_search = spec;
    }
  }
  if (doc.contains("analysis")) {
    if (auto names = problems.ReadStrings(doc["analysis"], "analysis")) {
      for (size_t i = 0; i < names->size(); ++i) {
        const auto& known = KnownAnalyses();
        if (std::find(known.begin(), known.end(), (*names)[i]) == known.end()) {
          problems.Add(JoinPath("analysis", i),
                       "unknown analysis '" + (*names)[i] + "'");
        }
      }
      s.analysis = *names;
    }
  }
  if (doc.contains("rectangularize")) {
    if (doc["rectangularize"].is_boolean()) {
      s.rectangularize = doc["rectangularize"].get<bool>();
    } else {
      problems.Add("rectangularize", "expected a boolean");
    }
  }
  problems.ThrowIfAny();

  // References resolve: the beliefs must describe the player's states.
  const std::string path = JoinPath("beliefs", s.player_name());
  try {
    const BeliefSpec& spec = s.player_beliefs();
    BuildPlayerProblem(*s.game, s.player, ResolveBeliefs(spec), s.bindings,
                       spec.groups);
  } catch (const StateSpaceMismatch& e) {
    problems.Add(path, e.what());
  } catch (const UnboundParameter& e) {
    problems.Add("bindings", e.what());
  } catch (const InvalidArgument& e) {
    problems.Add(path, e.what());
  }
  problems.ThrowIfAny();
  return s;
}

std::string ScenarioHash(const Json& doc) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> BuiltinScenarioNames() { return {"fig1", "fig4"}; }

std::optional<std::string> BuiltinScenarioText(const std::string& name) {
  if (name == "fig1") return std::string(kFig1ScenarioJson);
  if (name == "fig4") return std::string(kFig4ScenarioJson);
  return std::nullopt;
}

Scenario LoadScenario(const std::string& name_or_path) {
  std::string text;
  std::string origin = name_or_path;
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) {
    std::ifstream in(name_or_path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + name_or_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (auto builtin = BuiltinScenarioText(name_or_path)) {
    text = *builtin;
    origin = "built-in scenario " + name_or_path;
  } else {
    throw IoError("'" + name_or_path +
                  "' is neither a readable file nor a built-in scenario "
                  "(fig1, fig4)");
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError({origin + ": invalid JSON: " + e.what()});
  }
  return ScenarioFromJson(doc);
}

PlayerProblem ScenarioProblem(const Scenario& s) {
  const BeliefSpec& spec = s.player_beliefs();
  const CredalSet beliefs = ResolveBeliefs(spec);
  PlayerProblem pp =
      BuildPlayerProblem(*s.game, s.player, beliefs, s.bindings, spec.groups);
  if (!s.rectangularize) return pp;
  return BuildPlayerProblem(*s.game, s.player,
                            RectangularHull(beliefs, pp.filtration), s.bindings,
                            spec.groups);
}

}  // namespace ambigame
