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

#include "ambigame/builtin.h"

namespace ambigame {
namespace {

NodeSpec Leaf(std::vector<std::string> payoffs) {
  return NodeSpec{"", {}, std::move(payoffs)};
}

}  // namespace

NodeSpec TwoPlayerExampleRoot() {
  NodeSpec after_l{"2", {{"M", Leaf({"x", "0"})}, {"N", Leaf({"x", "101"})}}, {}};
  NodeSpec after_r{"2", {{"M", Leaf({"x", "101"})}, {"N", Leaf({"x", "100"})}}, {}};
  return NodeSpec{
      "1", {{"L", after_l}, {"R", after_r}, {"O", Leaf({"x", "-1"})}}, {}};
}

GameTree TwoPlayerExampleGame() {
  return GameTree({"1", "2"}, TwoPlayerExampleRoot(), {{{"L"}, {"R"}}},
                  {{"x", Rational(0)}});
}

NodeSpec ThreePlayerExampleRoot() {
  NodeSpec after_l{"2",
                   {{"M", Leaf({"x", "0", "y"})}, {"N", Leaf({"x", "101", "y"})}},
                   {}};
  NodeSpec after_rn{"3",
                    {{"S", Leaf({"x", "100", "y_RN_S"})},
                     {"T", Leaf({"x", "100", "y_RN_T"})}},
                    {}};
  NodeSpec after_r{"2", {{"M", Leaf({"x", "101", "y"})}, {"N", after_rn}}, {}};
  NodeSpec after_o{"3",
                   {{"S", Leaf({"x", "-1", "y_O_S"})},
                    {"T", Leaf({"x", "-1", "y_O_T"})}},
                   {}};
  return NodeSpec{"1", {{"L", after_l}, {"R", after_r}, {"O", after_o}}, {}};
}

GameTree ThreePlayerExampleGame() {
  Bindings parameters{{"x", Rational(0)}, {"y", Rational(0)}};
  for (const auto& slot : ThreePlayerExampleSlots()) parameters[slot] = 0;
  return GameTree({"1", "2", "3"}, ThreePlayerExampleRoot(),
                  {{{"L"}, {"R"}}, {{"R", "N"}, {"O"}}}, parameters);
}

std::vector<std::string> ThreePlayerExampleSlots() {
  return {"y_RN_S", "y_RN_T", "y_O_S", "y_O_T"};
}

StateSpace PlayerOneMoves() { return StateSpace({"L", "R", "O"}); }

std::vector<Vector> ExampleRectangularVertices() {
  return {
      {Rational(7, 32), Rational(21, 32), Rational(1, 8)},  // A
      {Rational(7, 16), Rational(7, 16), Rational(1, 8)},   // B
      {Rational(1, 4), Rational(1, 4), Rational(1, 2)},     // C
      {Rational(1, 8), Rational(3, 8), Rational(1, 2)},     // D
  };
}

CredalSet ExampleRectangularBeliefs() {
  return CredalSet(PlayerOneMoves(), ExampleRectangularVertices());
}

}  // namespace ambigame
