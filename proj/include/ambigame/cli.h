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

// The ambigame command-line front end.
//
// Exit codes: 0 success, 1 I/O, schema or usage error, 2 analysis error.

#ifndef AMBIGAME_CLI_H_
#define AMBIGAME_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ambigame/dynamics.h"
#include "ambigame/scenario.h"

namespace ambigame {

inline constexpr const char kToolName[] = "ambigame";
inline constexpr const char kToolVersion[] = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitAnalysis = 2;

// Runs one command. `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Copy of `s` with the analyzed player's contamination level set to `eps`.
// Throws InvalidArgument unless those beliefs are an eps-contamination.
Scenario WithEps(const Scenario& s, const Rational& eps);

struct SweepRow {
  Rational eps;
  ConsistencyReport report;
};

// Dynamic-consistency verdicts for each eps, sorted by eps. Evaluations run
// on `workers` threads.
std::vector<SweepRow> SweepEps(const Scenario& s, std::vector<Rational> eps,
                               int workers);

// {1/k : k = denominator, ..., 2} for "reciprocal" or {i/denominator : 0 < i <
// denominator} for "uniform", ascending. Throws InvalidArgument otherwise.
std::vector<Rational> EpsGrid(const std::string& kind, int denominator);

struct BisectResult {
  std::optional<Rational> last_consistent;
  std::optional<Rational> first_inconsistent;
  std::vector<SweepRow> probes;  // In evaluation order.
  std::string note;              // Set when the grid has no crossing.
};

// Bisection on an ascending grid, assuming verdicts switch once from
// Consistent to Inconsistent.
BisectResult BisectThreshold(const Scenario& s, const std::vector<Rational>& grid);

// AMBIGAME_WORKERS if set, else the hardware concurrency. Throws
// InvalidArgument for values that are not positive integers.
int WorkerCount();

}  // namespace ambigame

#endif  // AMBIGAME_CLI_H_
