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

// Test-only generators of small random games.

#ifndef WSDGAME_TESTS_RANDOM_GAMES_HPP_
#define WSDGAME_TESTS_RANDOM_GAMES_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wsdgame/dynamics.hpp"
#include "wsdgame/payoff.hpp"

namespace testgames {

struct RandomGame {
  wsdgame::StrategyState start;
  wsdgame::Matrix weights;
  wsdgame::PayoffStore payoffs;
};

// Up to `max_players` players, each with 1..`max_strategies` strategies drawn
// from a shared concept pool, symmetric similarities uniform in [0,1] and
// a complete graph with positive weights. The start is the uniform interior
// point of each player's simplex.
inline RandomGame random_game(std::mt19937_64& rng, std::size_t max_players = 4,
                              std::size_t max_strategies = 4) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  const std::size_t n = 2 + rng() % (max_players - 1);
  const std::size_t pool = max_strategies + rng() % (2 * max_strategies);
  std::vector<std::string> concepts;
  for (std::size_t k = 0; k < pool; ++k) concepts.push_back("c" + std::to_string(k));

  RandomGame g;
  g.start.concepts = concepts;
  g.start.matrix = wsdgame::Matrix(n, pool);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> cols(pool);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    cols.resize(1 + rng() % max_strategies);
    for (std::size_t c : cols) g.start.matrix(i, c) = 1.0 / static_cast<double>(cols.size());
    g.start.supports.push_back(cols);
  }
  wsdgame::Matrix z(pool, pool);
  for (std::size_t a = 0; a < pool; ++a)
    for (std::size_t b = a + 1; b < pool; ++b) z(a, b) = z(b, a) = unit(rng);
  g.payoffs = wsdgame::PayoffStore(concepts, z, wsdgame::PayoffProvider::precomputed);
  g.weights = wsdgame::Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.weights(i, j) = g.weights(j, i) = weight(rng);
  return g;
}

}  // namespace testgames

#endif  // WSDGAME_TESTS_RANDOM_GAMES_HPP_
