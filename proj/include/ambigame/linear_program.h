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

#ifndef AMBIGAME_LINEAR_PROGRAM_H_
#define AMBIGAME_LINEAR_PROGRAM_H_

#include <optional>
#include <vector>

#include "ambigame/rational.h"

namespace ambigame {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  Vector coefficients;
  Relation relation;
  Rational rhs;
};

// A missing bound means the variable is unbounded in that direction.
struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

// maximize objective . x subject to the constraints and bounds.
//
// `bounds` is either empty (every variable free) or has one entry per
// variable.
struct LinearProgram {
  Vector objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VariableBounds> bounds;

  int num_variables() const { return static_cast<int>(objective.size()); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;  // Meaningful only when optimal.
  Vector point;    // Ditto.
};

// Two-phase dense simplex over exact rationals. Bland's rule picks both the
// entering and the leaving variable, so the pivot sequence (and therefore
// the returned optimal point) is a deterministic function of the input.
// Throws DimensionMismatch for malformed programs.
LpResult SolveLinearProgram(const LinearProgram& lp);

// Convenience: feasibility of the constraint system alone.
bool IsFeasible(const LinearProgram& lp);

}  // namespace ambigame

#endif  // AMBIGAME_LINEAR_PROGRAM_H_
