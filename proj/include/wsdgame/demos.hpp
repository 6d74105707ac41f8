// Copyright 2026 The wsdgame Authors.
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

#ifndef WSDGAME_DEMOS_HPP_
#define WSDGAME_DEMOS_HPP_

#include "wsdgame/dynamics.hpp"
#include "wsdgame/matrix.hpp"
#include "wsdgame/senses.hpp"

namespace wsdgame {

// Two-player prisoner's dilemma as a polymatrix game. Column 0 is
// "confess", column 1 "cooperate" (do not confess); both players receive
// the row payoffs
//
//               confess  cooperate
//   confess       -5         0
//   cooperate     -6        -1
//
// and start from the uniform mixed strategy. All payoffs are negative, so
// the discrete ratio update moves mass toward the strategy with the *lower*
// payoff; this is not the continuous-time replicator flow.
struct PrisonersDilemma {
  StrategyState start;
  Matrix weights;
  PolymatrixGame game;
};

inline PrisonersDilemma make_prisoners_dilemma() {
  Matrix a(2, 2);
  a(0, 0) = -5.0;
  a(0, 1) = 0.0;
  a(1, 0) = -6.0;
  a(1, 1) = -1.0;

  PrisonersDilemma pd{StrategyState{}, Matrix(2, 2), PolymatrixGame(2, 2)};
  pd.start.concepts = {"confess", "cooperate"};
  pd.start.supports = {{0, 1}, {0, 1}};
  pd.start.matrix = Matrix(2, 2, 0.5);
  pd.weights(0, 1) = 1.0;
  pd.weights(1, 0) = 1.0;
  // Player 2 picks columns of the table; transposing its column payoffs
  // gives the same matrix as player 1's.
  pd.game.set(0, 1, a);
  pd.game.set(1, 0, a);
  return pd;
}

}  // namespace wsdgame

#endif  // WSDGAME_DEMOS_HPP_
