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

#ifndef AMBIGAME_BUILTIN_H_
#define AMBIGAME_BUILTIN_H_

#include <string>
#include <vector>

#include "ambigame/beliefs.h"
#include "ambigame/game_tree.h"

namespace ambigame {

// Player 1 picks L, R or O; O ends the game. After L or R, player 2 picks M
// or N without seeing which. Player 2 gets 0/101 after L, 101/100 after R
// and -1 after O. Player 1's payoff is the free parameter x.
NodeSpec TwoPlayerExampleRoot();
GameTree TwoPlayerExampleGame();

// The two-player game extended by player 3, who moves (S or T) after RN
// and after O without telling them apart. Player 3 gets y after LM, LN and
// RM; the four payoffs after RN and O are the parameters listed by
// ThreePlayerExampleSlots().
NodeSpec ThreePlayerExampleRoot();
GameTree ThreePlayerExampleGame();
std::vector<std::string> ThreePlayerExampleSlots();

// States (L, R, O) of player 1's move.
StateSpace PlayerOneMoves();

// The rectangular quadrilateral over (L, R, O) obtained by composing
// P(O) in [1/8, 1/2] with P(R | {L,R}) in [1/2, 3/4], vertices listed as
// A, B, C, D.
std::vector<Vector> ExampleRectangularVertices();
CredalSet ExampleRectangularBeliefs();

}  // namespace ambigame

#endif  // AMBIGAME_BUILTIN_H_
