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

// JSON forms of the library's values. Rationals are always strings "p/q"
// or "n"; integer JSON numbers are accepted on input, floats never are.
// Every *FromJson function validates the whole document and throws one
// SchemaError listing each offending path.

#ifndef AMBIGAME_JSON_IO_H_
#define AMBIGAME_JSON_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "ambigame/beliefs.h"
#include "ambigame/dynamics.h"
#include "ambigame/game_tree.h"
#include "ambigame/maxmin.h"
#include "json.hpp"

namespace ambigame {

using Json = nlohmann::json;

// Collects schema problems as "path: message" strings.
class SchemaProblems {
 public:
  void Add(const std::string& path, const std::string& message) {
    problems_.push_back((path.empty() ? std::string("$") : path) + ": " +
                        message);
  }
  bool empty() const { return problems_.empty(); }
  const std::vector<std::string>& list() const { return problems_; }
  // Throws SchemaError if anything was recorded.
  void ThrowIfAny() const;

  // Typed accessors. Each records a problem and returns false on mismatch.
  bool ExpectObject(const Json& j, const std::string& path);
  bool ExpectArray(const Json& j, const std::string& path);
  bool ExpectString(const Json& j, const std::string& path);
  // Records every key of `j` not in `allowed`.
  void RejectUnknownKeys(const Json& j, const std::string& path,
                         const std::vector<std::string>& allowed);
  // Records a problem if `key` is missing; returns whether it is present.
  bool Require(const Json& j, const std::string& path, const std::string& key);

  std::optional<Rational> ReadRational(const Json& j, const std::string& path);
  std::optional<Vector> ReadVector(const Json& j, const std::string& path);
  std::optional<std::vector<std::string>> ReadStrings(const Json& j,
                                                      const std::string& path);

 private:
  std::vector<std::string> problems_;
};

std::string JoinPath(const std::string& base, const std::string& key);
std::string JoinPath(const std::string& base, size_t index);

Json ToJson(const Rational& r);
Json ToJson(const Vector& v);
Json ToJson(const std::vector<Vector>& vs);
Rational RationalFromJson(const Json& j);
Vector VectorFromJson(const Json& j);

// {players, root, information_sets, parameters}.
Json GameToJson(const GameTree& game);
GameTree GameFromJson(const Json& j);
// Appends problems under `path` instead of throwing; nullopt on failure.
std::optional<GameTree> ParseGame(const Json& j, const std::string& path,
                                  SchemaProblems& problems);

// {states, vertices}.
Json CredalSetToJson(const CredalSet& c);
CredalSet CredalSetFromJson(const Json& j);
std::optional<CredalSet> ParseCredalSet(const Json& j, const std::string& path,
                                        SchemaProblems& problems);

// {states, stages}; `stages` lists partitions by state label. `states` may
// be omitted on input when `space` is supplied.
Json FiltrationToJson(const Filtration& f);
Filtration FiltrationFromJson(const Json& j,
                              const std::optional<StateSpace>& space = {});

Json MaxminSolutionToJson(const MaxminSolution& s);
MaxminSolution MaxminSolutionFromJson(const Json& j);

Json ConsistencyReportToJson(const ConsistencyReport& r);
ConsistencyReport ConsistencyReportFromJson(const Json& j);

Json BindingsToJson(const Bindings& b);

}  // namespace ambigame

#endif  // AMBIGAME_JSON_IO_H_
