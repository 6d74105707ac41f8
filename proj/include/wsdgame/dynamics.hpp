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

#ifndef WSDGAME_DYNAMICS_HPP_
#define WSDGAME_DYNAMICS_HPP_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <thread>
#include <utility>
#include <vector>

#include "wsdgame/matrix.hpp"
#include "wsdgame/senses.hpp"
#include "wsdgame/tsv.hpp"

namespace wsdgame {

// Source of the pairwise payoffs of a polymatrix game: the payoff player i
// receives playing column a against player j playing column b.
template <class P>
concept PayoffModel = requires(const P& p, std::size_t i, std::size_t j, std::size_t a,
                               std::size_t b) {
  { p.payoff(i, j, a, b) } -> std::convertible_to<double>;
};

// Explicit payoff matrix per ordered pair of players, indexed by global
// strategy columns. Pairs without a matrix pay 0. Used for games that are not
// driven by a symmetric similarity matrix (e.g. the prisoner's dilemma).
class PolymatrixGame {
 public:
  PolymatrixGame(std::size_t players, std::size_t columns)
      : players_(players), columns_(columns), mats_(players * players) {}

  void set(std::size_t i, std::size_t j, Matrix m) {
    if (m.rows() != columns_ || m.cols() != columns_) throw Error("payoff matrix has wrong shape");
    mats_[i * players_ + j] = std::move(m);
  }

  double payoff(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const {
    const Matrix& m = mats_[i * players_ + j];
    return m.rows() ? m(a, b) : 0.0;
  }

 private:
  std::size_t players_, columns_;
  std::vector<Matrix> mats_;
};

enum class TieBreak { lowest_rank };
enum class Fallback { none, first_sense };

struct GameConfig {
  std::size_t max_iterations = 1000;
  double epsilon = 1e-6;
  TieBreak tie_break = TieBreak::lowest_rank;
  Fallback fallback = Fallback::none;
  std::size_t workers = 1;
  bool record_trajectory = false;

  void validate() const {
    if (max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
    if (workers < 1) throw ConfigError("workers must be >= 1");
  }
};

struct PlayerOutcome {
  std::optional<std::size_t> column;  // empty: unassigned
  double probability = 0.0;
  std::size_t iterations = 0;  // last iteration that moved the row by >= epsilon
  bool converged = false;

  bool assigned() const { return column.has_value(); }
};

struct GameOutcome {
  std::vector<PlayerOutcome> players;
  StrategyState final_state;
  std::size_t iterations = 0;
  bool converged = false;
  double last_change = 0.0;
  std::vector<Matrix> trajectory;  // initial state first, when recorded
};

// Nonzero-weight neighbors of every player in increasing index order. The
// fixed order makes payoff sums independent of the worker count.
class Neighborhood {
 public:
  explicit Neighborhood(const Matrix& w) : adj_(w.rows()) {
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j)
        if (j != i && w(i, j) != 0.0) adj_[i].emplace_back(j, w(i, j));
  }
  const std::vector<std::pair<std::size_t, double>>& of(std::size_t i) const { return adj_[i]; }

 private:
  std::vector<std::vector<std::pair<std::size_t, double>>> adj_;
};

namespace detail {

// u[k] = sum_j w_ij (Z_ij x_j)_h for h = supports[i][k].
template <PayoffModel P>
void support_payoffs(std::size_t i, const StrategyState& s, const Neighborhood& nb, const P& z,
                     std::vector<double>& u) {
  const auto& mine = s.supports[i];
  u.assign(mine.size(), 0.0);
  for (const auto& [j, w] : nb.of(i)) {
    const auto xj = s.matrix.row(j);
    for (std::size_t k = 0; k < mine.size(); ++k) {
      double acc = 0.0;
      for (std::size_t b : s.supports[j])
        if (xj[b] != 0.0) acc += z.payoff(i, j, mine[k], b) * xj[b];
      u[k] += w * acc;
    }
  }
}

template <class Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t begin = 0; begin < n; begin += chunk)
    pool.emplace_back([&fn, begin, end = std::min(n, begin + chunk)] { fn(begin, end); });
}

// One discrete replicator update of row i from payoffs u. Rows with zero
// average payoff stay put; negative entries (possible only with mixed-sign
// payoffs) are clipped before renormalizing.
inline void update_row(std::span<const double> x, const std::vector<std::size_t>& support,
                       const std::vector<double>& u, std::span<double> out) {
  double avg = 0.0;
  for (std::size_t k = 0; k < support.size(); ++k) avg += x[support[k]] * u[k];
  if (avg == 0.0 || !std::isfinite(avg)) return;
  double sum = 0.0;
  for (std::size_t k = 0; k < support.size(); ++k) {
    double v = x[support[k]] * u[k] / avg;
    if (!(v > 0.0)) v = 0.0;
    out[support[k]] = v;
    sum += v;
  }
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    for (std::size_t col : support) out[col] = x[col];
    return;
  }
  for (std::size_t col : support) out[col] /= sum;
}

}  // namespace detail

// u_i(e^h, x) for the global column h, which must be one of player i's
// strategies.
template <PayoffModel P>
double strategy_payoff(std::size_t i, std::size_t h, const StrategyState& s, const Matrix& w,
                       const P& z) {
  const auto& sup = s.supports[i];
  const auto it = std::find(sup.begin(), sup.end(), h);
  if (it == sup.end()) throw Error("strategy is not in the player's inventory");
  std::vector<double> u;
  detail::support_payoffs(i, s, Neighborhood(w), z, u);
  return u[static_cast<std::size_t>(it - sup.begin())];
}

// u_i(x) = sum_h x_ih u_i(e^h, x).
template <PayoffModel P>
double average_payoff(std::size_t i, const StrategyState& s, const Matrix& w, const P& z) {
  std::vector<double> u;
  detail::support_payoffs(i, s, Neighborhood(w), z, u);
  double avg = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) avg += s.matrix(i, s.supports[i][k]) * u[k];
  return avg;
}

// Synchronous discrete replicator step: every player's payoffs are computed
// against S(t), then x_h(t+1) = x_h(t) u(e^h, x) / u(x, x).
template <PayoffModel P>
StrategyState replicator_step(const StrategyState& s, const Matrix& w, const P& z,
                              std::size_t workers = 1) {
  const Neighborhood nb(w);
  StrategyState next = s;
  detail::parallel_for(s.players(), workers, [&](std::size_t begin, std::size_t end) {
    std::vector<double> u;
    for (std::size_t i = begin; i < end; ++i) {
      detail::support_payoffs(i, s, nb, z, u);
      detail::update_row(s.matrix.row(i), s.supports[i], u, next.matrix.row(i));
    }
  });
  return next;
}

namespace detail {

inline bool uniform_on_support(std::span<const double> row, const std::vector<std::size_t>& sup) {
  if (sup.empty()) return true;
  const double expected = 1.0 / static_cast<double>(sup.size());
  for (std::size_t col : sup)
    if (std::fabs(row[col] - expected) > 1e-12) return false;
  return true;
}

}  // namespace detail

// Iterates replicator_step until the largest entry change drops below
// cfg.epsilon or cfg.max_iterations is hit, then gives each player the
// highest-probability strategy (lowest rank on ties). A player whose payoffs
// were zero throughout and whose row is still uniform could not update its
// strategy and is left unassigned, unless cfg.fallback picks its top sense.
template <PayoffModel P>
GameOutcome run(const StrategyState& s0, const Matrix& w, const P& z, const GameConfig& cfg) {
  cfg.validate();
  const std::size_t n = s0.players();
  const Neighborhood nb(w);

  GameOutcome out;
  out.players.resize(n);
  StrategyState cur = s0;
  StrategyState next = s0;
  std::vector<char> moved_payoff(n, 0);
  std::vector<double> player_change(n, std::numeric_limits<double>::infinity());
  if (cfg.record_trajectory) out.trajectory.push_back(cur.matrix);

  for (std::size_t t = 1; t <= cfg.max_iterations; ++t) {
    detail::parallel_for(n, cfg.workers, [&](std::size_t begin, std::size_t end) {
      std::vector<double> u;
      for (std::size_t i = begin; i < end; ++i) {
        detail::support_payoffs(i, cur, nb, z, u);
        for (double v : u)
          if (v != 0.0) moved_payoff[i] = 1;
        detail::update_row(cur.matrix.row(i), cur.supports[i], u, next.matrix.row(i));
      }
    });

    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double d = 0.0;
      for (std::size_t col : cur.supports[i])
        d = std::max(d, std::fabs(next.matrix(i, col) - cur.matrix(i, col)));
      player_change[i] = d;
      if (d >= cfg.epsilon) out.players[i].iterations = t;
      change = std::max(change, d);
    }
    std::swap(cur, next);
    next.matrix = cur.matrix;
    out.iterations = t;
    out.last_change = change;
    if (cfg.record_trajectory) out.trajectory.push_back(cur.matrix);
    if (change < cfg.epsilon) {
      out.converged = true;
      break;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    PlayerOutcome& po = out.players[i];
    po.converged = player_change[i] < cfg.epsilon;
    const auto& sup = cur.supports[i];
    if (sup.empty()) continue;
    const auto row = cur.matrix.row(i);
    const bool stuck = !moved_payoff[i] && detail::uniform_on_support(row, sup);
    if (stuck && cfg.fallback == Fallback::none) continue;
    std::size_t best = sup.front();
    for (std::size_t col : sup)
      if (row[col] > row[best]) best = col;
    po.column = best;
    po.probability = row[best];
  }
  out.final_state = std::move(cur);
  return out;
}

// Nash test per player: every strategy played with probability above `tol`
// earns within `tol` of the best payoff available to the player, and no
// strategy played with lower probability beats the worst of those by more
// than `tol`.
template <PayoffModel P>
std::vector<bool> nash_check(const StrategyState& s, const Matrix& w, const P& z, double tol) {
  const Neighborhood nb(w);
  std::vector<bool> ok(s.players(), true);
  std::vector<double> u;
  for (std::size_t i = 0; i < s.players(); ++i) {
    const auto& sup = s.supports[i];
    if (sup.empty()) continue;
    detail::support_payoffs(i, s, nb, z, u);
    const double best = *std::max_element(u.begin(), u.end());
    double worst_played = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < sup.size(); ++k) {
      if (s.matrix(i, sup[k]) > tol) {
        worst_played = std::min(worst_played, u[k]);
        if (best - u[k] > tol) ok[i] = false;
      }
    }
    for (std::size_t k = 0; k < sup.size(); ++k)
      if (s.matrix(i, sup[k]) <= tol && u[k] - worst_played > tol) ok[i] = false;
  }
  return ok;
}

// iteration<TAB>player<TAB>concept<TAB>probability for every recorded state
// and every sense of every player.
inline void write_trajectory(const GameOutcome& out, std::ostream& os) {
  const StrategyState& s = out.final_state;
  for (std::size_t t = 0; t < out.trajectory.size(); ++t)
    for (std::size_t i = 0; i < s.players(); ++i)
      for (std::size_t col : s.supports[i])
        os << t << '\t' << i << '\t' << s.concepts[col] << '\t'
           << tsv::format_double(out.trajectory[t](i, col)) << '\n';
}

inline void write_trajectory(const GameOutcome& out, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot write " + path);
  write_trajectory(out, os);
}

}  // namespace wsdgame

#endif  // WSDGAME_DYNAMICS_HPP_
