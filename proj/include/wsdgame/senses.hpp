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

#ifndef WSDGAME_SENSES_HPP_
#define WSDGAME_SENSES_HPP_

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsdgame/graph.hpp"
#include "wsdgame/matrix.hpp"
#include "wsdgame/tsv.hpp"

namespace wsdgame {

// Ranked senses of one (lemma, pos), most frequent first, plus an optional
// ranked partition of those senses into clusters.
struct SenseEntry {
  std::vector<std::string> concepts;
  std::optional<std::vector<std::vector<std::string>>> clusters;
};

class SenseInventory {
 public:
  using Key = std::pair<std::string, std::string>;  // (lemma, pos)

  // lemma<TAB>pos<TAB>c1,c2,...
  static SenseInventory load(const std::string& path) {
    SenseInventory inv;
    tsv::Reader reader(path);
    std::string line;
    while (reader.next(line)) {
      auto f = reader.fields(line, 3);
      auto ids = tsv::split(f[2], ',');
      std::set<std::string> seen;
      for (auto& id : ids) {
        id = std::string(tsv::trim(id));
        if (id.empty()) reader.fail("empty concept id");
        if (!seen.insert(id).second) reader.fail("duplicate concept id '" + id + "'");
      }
      if (inv.entries_.count({f[0], f[1]})) reader.fail("duplicate entry for " + f[0] + "/" + f[1]);
      inv.add(f[0], f[1], std::move(ids));
    }
    return inv;
  }

  // lemma<TAB>pos<TAB>{c1,c2}|{c3}|... clusters in rank order. Each line must
  // partition the senses of an entry already loaded.
  void load_clusters(const std::string& path) {
    tsv::Reader reader(path);
    std::string line;
    while (reader.next(line)) {
      auto f = reader.fields(line, 3);
      auto it = entries_.find({f[0], f[1]});
      if (it == entries_.end()) reader.fail("clusters for unknown entry " + f[0] + "/" + f[1]);
      std::vector<std::vector<std::string>> clusters;
      for (const auto& group : tsv::split(f[2], '|')) {
        auto g = tsv::trim(group);
        if (g.size() < 2 || g.front() != '{' || g.back() != '}') {
          reader.fail("cluster must be written as {id,...}");
        }
        std::vector<std::string> members;
        for (const auto& id : tsv::split(g.substr(1, g.size() - 2), ','))
          members.emplace_back(tsv::trim(id));
        clusters.push_back(std::move(members));
      }
      try {
        set_clusters(it->second, std::move(clusters));
      } catch (const Error& e) {
        reader.fail(e.what());
      }
    }
  }

  void add(const std::string& lemma, const std::string& pos, std::vector<std::string> concepts) {
    Key key{lemma, pos};
    if (!entries_.count(key)) order_.push_back(key);
    entries_[key] = SenseEntry{std::move(concepts), std::nullopt};
  }

  void add_clusters(const std::string& lemma, const std::string& pos,
                    std::vector<std::vector<std::string>> clusters) {
    auto it = entries_.find({lemma, pos});
    if (it == entries_.end()) throw MissingInventory("no entry for " + lemma + "/" + pos);
    set_clusters(it->second, std::move(clusters));
  }

  const SenseEntry* find(const std::string& lemma, const std::string& pos) const {
    auto it = entries_.find({lemma, pos});
    return it == entries_.end() ? nullptr : &it->second;
  }

  const SenseEntry& at(const Occurrence& occ) const {
    const SenseEntry* e = find(occ.lemma, occ.pos);
    if (!e || e->concepts.empty()) {
      throw MissingInventory("no senses for " + occ.lemma + "/" + occ.pos +
                             (occ.scored() ? " (instance " + occ.instance_id + ")" : ""));
    }
    return *e;
  }

  bool covers(const Occurrence& occ) const {
    const SenseEntry* e = find(occ.lemma, occ.pos);
    return e && !e->concepts.empty();
  }

  // Other lemmas with the same pos sharing at least one concept with
  // (lemma, pos), in file order.
  std::vector<std::string> alternatives(const std::string& lemma, const std::string& pos) const {
    std::vector<std::string> out;
    const SenseEntry* self = find(lemma, pos);
    if (!self) return out;
    std::set<std::string> mine(self->concepts.begin(), self->concepts.end());
    for (const auto& key : order_) {
      if (key.second != pos || key.first == lemma) continue;
      for (const auto& c : entries_.at(key).concepts) {
        if (mine.count(c)) {
          out.push_back(key.first);
          break;
        }
      }
    }
    return out;
  }

 private:
  static void set_clusters(SenseEntry& entry, std::vector<std::vector<std::string>> clusters) {
    std::multiset<std::string> members;
    for (const auto& c : clusters) {
      if (c.empty()) throw Error("empty cluster");
      members.insert(c.begin(), c.end());
    }
    std::multiset<std::string> senses(entry.concepts.begin(), entry.concepts.end());
    if (members != senses) throw Error("clusters do not partition the senses of the entry");
    entry.clusters = std::move(clusters);
  }

  std::map<Key, SenseEntry> entries_;
  std::vector<Key> order_;
};

// Mixed strategies of all players over the global concept list. Row i is a
// point of the simplex supported on the columns in supports[i], which lists
// the player's senses in rank order.
struct StrategyState {
  std::vector<std::string> concepts;
  std::vector<std::vector<std::size_t>> supports;
  Matrix matrix;

  std::size_t players() const { return matrix.rows(); }

  std::size_t column_of(const std::string& concept_id) const {
    for (std::size_t k = 0; k < concepts.size(); ++k)
      if (concepts[k] == concept_id) return k;
    throw UnknownConcept("unknown concept '" + concept_id + "'");
  }

  friend bool operator==(const StrategyState&, const StrategyState&) = default;
};

namespace detail {

// Global concept list C in first-appearance order and per-player columns.
inline StrategyState layout(const SenseInventory& inv, const std::vector<Occurrence>& players) {
  StrategyState s;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& p : players) {
    std::vector<std::size_t> cols;
    for (const auto& id : inv.at(p).concepts) {
      auto [it, fresh] = index.emplace(id, s.concepts.size());
      if (fresh) s.concepts.push_back(id);
      cols.push_back(it->second);
    }
    s.supports.push_back(std::move(cols));
  }
  s.matrix = Matrix(players.size(), s.concepts.size());
  return s;
}

inline void normalize_row(std::span<double> row) {
  double sum = 0.0;
  for (double v : row) sum += v;
  for (double& v : row) v /= sum;
}

}  // namespace detail

// s_ij = 1/|M_i| on the player's senses.
inline StrategyState init_uniform(const SenseInventory& inv, const std::vector<Occurrence>& players) {
  StrategyState s = detail::layout(inv, players);
  for (std::size_t i = 0; i < players.size(); ++i) {
    const double v = 1.0 / static_cast<double>(s.supports[i].size());
    for (std::size_t col : s.supports[i]) s.matrix(i, col) = v;
  }
  return s;
}

// s_ij proportional to p(1-p)^r with r the sense rank. `first_rank` only
// shifts every weight by a common factor that normalization removes.
inline StrategyState init_geometric(const SenseInventory& inv,
                                    const std::vector<Occurrence>& players, double p,
                                    int first_rank = 0) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("geometric parameter p must lie in (0, 1)");
  StrategyState s = detail::layout(inv, players);
  for (std::size_t i = 0; i < players.size(); ++i) {
    const auto& cols = s.supports[i];
    for (std::size_t r = 0; r < cols.size(); ++r)
      s.matrix(i, cols[r]) = p * std::pow(1.0 - p, static_cast<double>(r) + first_rank);
    detail::normalize_row(s.matrix.row(i));
  }
  return s;
}

// As init_geometric, but every sense takes the rank of its cluster so the
// senses of one cluster share the same probability.
inline StrategyState init_clustered(const SenseInventory& inv,
                                    const std::vector<Occurrence>& players, double p) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("geometric parameter p must lie in (0, 1)");
  StrategyState s = detail::layout(inv, players);
  for (std::size_t i = 0; i < players.size(); ++i) {
    const SenseEntry& entry = inv.at(players[i]);
    if (!entry.clusters) {
      throw MissingClusters("no clusters for " + players[i].lemma + "/" + players[i].pos);
    }
    const auto& clusters = *entry.clusters;
    for (std::size_t r = 0; r < clusters.size(); ++r) {
      const double w = p * std::pow(1.0 - p, static_cast<double>(r));
      for (const auto& id : clusters[r]) {
        for (std::size_t k = 0; k < entry.concepts.size(); ++k)
          if (entry.concepts[k] == id) s.matrix(i, s.supports[i][k]) = w;
      }
    }
    detail::normalize_row(s.matrix.row(i));
  }
  return s;
}

}  // namespace wsdgame

#endif  // WSDGAME_SENSES_HPP_
