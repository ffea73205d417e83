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

// Scenario documents: a game, one player's beliefs and the analyses to run.
// The schema is described in docs/scenario_schema.md.

#ifndef AMBIGAME_SCENARIO_H_
#define AMBIGAME_SCENARIO_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ambigame/beliefs.h"
#include "ambigame/dynamics.h"
#include "ambigame/errors.h"
#include "ambigame/game_tree.h"
#include "ambigame/json_io.h"

namespace ambigame {

struct BeliefSpec {
  enum class Kind { kVertices, kContamination, kInduced };
  Kind kind = Kind::kVertices;
  std::vector<std::string> states;
  // kVertices. `labels` is empty or names each listed vertex.
  std::vector<Vector> vertices;
  std::vector<std::string> labels;
  // kContamination.
  Vector center;
  Rational eps;
  // kInduced: the upstream set and the interval for the probability of N.
  std::shared_ptr<const BeliefSpec> upstream;
  Rational n_low, n_high;
  StateGroups groups;
};

// The credal set a spec describes.
CredalSet ResolveBeliefs(const BeliefSpec& spec);

// Label of each vertex of ResolveBeliefs(spec), or "" where none applies.
// Induced vertices are named after the upstream vertex they come from,
// with a prime appended.
std::vector<std::string> VertexLabels(const BeliefSpec& spec);

struct PayoffSearchSpec {
  std::vector<std::string> slots;
  std::vector<Rational> grid;
};

inline const std::vector<std::string>& KnownAnalyses() {
  static const std::vector<std::string> kNames = {
      "maxmin", "update", "rect-hull", "check-rect",
      "check-dc", "induce", "find-payoffs"};
  return kNames;
}

struct Scenario {
  std::string name;
  std::string description;
  Json source;       // The document as parsed.
  std::string hash;  // ScenarioHash(source).
  std::shared_ptr<const GameTree> game;
  int player = -1;
  std::map<std::string, BeliefSpec> beliefs;  // Keyed by player name.
  Bindings bindings;
  std::optional<PayoffSearchSpec> payoff_search;
  std::vector<std::string> analysis;
  bool rectangularize = false;

  const std::string& player_name() const { return game->players()[player]; }
  const BeliefSpec& player_beliefs() const { return beliefs.at(player_name()); }
};

// Parses and validates a scenario document, collecting every problem
// (including perfect-recall failures and beliefs that do not match the
// player's states) into one SchemaError.
Scenario ScenarioFromJson(const Json& doc);

// FNV-1a (64 bit) of the canonical dump, which sorts object keys, so the
// hash does not depend on key order in the input file.
std::string ScenarioHash(const Json& doc);

// Names of the scenarios compiled into the library.
std::vector<std::string> BuiltinScenarioNames();
// Source text of a built-in scenario, or nullopt.
std::optional<std::string> BuiltinScenarioText(const std::string& name);

// Reads `name_or_path` as a file if one exists, otherwise as a built-in
// name. Throws IoError or SchemaError.
Scenario LoadScenario(const std::string& name_or_path);

class IoError : public Error {
 public:
  using Error::Error;
};

// The player problem for `s`, with the player's beliefs replaced by their
// rectangular hull when `s.rectangularize` is set.
PlayerProblem ScenarioProblem(const Scenario& s);

}  // namespace ambigame

#endif  // AMBIGAME_SCENARIO_H_
