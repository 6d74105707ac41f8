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

#ifndef WSDGAME_GRAPH_HPP_
#define WSDGAME_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "wsdgame/contingency.hpp"
#include "wsdgame/counts.hpp"
#include "wsdgame/matrix.hpp"
#include "wsdgame/tsv.hpp"

namespace wsdgame {

// One occurrence of a target word in a document. Every occurrence is a
// distinct player, even when two share a lemma.
struct Occurrence {
  std::string doc_id;
  std::int64_t position = 0;
  std::string lemma;
  std::string pos;
  std::string instance_id;  // "" or "-" for context-only players

  bool scored() const { return !instance_id.empty() && instance_id != "-"; }
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// doc_id<TAB>position<TAB>lemma<TAB>pos<TAB>instance_id
inline std::vector<Occurrence> load_occurrences(const std::string& path) {
  tsv::Reader reader(path);
  std::vector<Occurrence> out;
  std::string line;
  while (reader.next(line)) {
    auto f = reader.fields(line, 5);
    Occurrence occ;
    occ.doc_id = f[0];
    occ.position = reader.to_int<std::int64_t>(f[1], "position");
    occ.lemma = f[2];
    occ.pos = f[3];
    occ.instance_id = f[4];
    if (occ.lemma.empty()) reader.fail("empty lemma");
    out.push_back(std::move(occ));
  }
  return out;
}

using StopWords = std::unordered_set<std::string>;

inline StopWords load_stopwords(const std::string& path) {
  tsv::Reader reader(path);
  StopWords words;
  std::string line;
  while (reader.next(line)) words.emplace(tsv::trim(line));
  return words;
}

// Symmetric weighted graph over players with a zero diagonal.
struct WordGraph {
  std::vector<Occurrence> players;
  Matrix weights;

  std::size_t size() const { return players.size(); }
  double weight(std::size_t i, std::size_t j) const { return weights(i, j); }

  void set_weight(std::size_t i, std::size_t j, double w) {
    weights(i, j) = w;
    weights(j, i) = w;
  }

  // Mean of the strictly positive upper-triangle weights; 0 if there are none.
  double mean_positive_weight() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (weights(i, j) > 0.0) {
          sum += weights(i, j);
          ++count;
        }
    return count ? sum / static_cast<double>(count) : 0.0;
  }

  friend bool operator==(const WordGraph&, const WordGraph&) = default;
};

struct NgramPolicy {
  std::size_t n = 0;  // window in content tokens; 0 disables augmentation
  StopWords stopwords;
};

struct GraphStats {
  std::size_t scored = 0;     // pairs that received a measure value
  std::size_t missing = 0;    // pair or word absent from the store
  std::size_t undefined = 0;  // measure undefined on the table
  std::size_t invalid = 0;    // inconsistent counts
};

// Weights every same-document pair of players by the association score of
// their lemmas. `keys[i]` is the word used to look player i up in the store
// (its lemma, or a substitute picked by expand_query). Pairs that cannot be
// scored get weight 0.
inline WordGraph build_word_graph(const std::vector<Occurrence>& players,
                                  const std::vector<std::string>& keys,
                                  const CooccurrenceStore& counts, AssociationMeasure measure,
                                  GraphStats* stats = nullptr) {
  WordGraph g{players, Matrix(players.size(), players.size())};
  GraphStats local;
  for (std::size_t i = 0; i < players.size(); ++i) {
    for (std::size_t j = i + 1; j < players.size(); ++j) {
      if (players[i].doc_id != players[j].doc_id) continue;
      try {
        auto table = counts.table(keys[i], keys[j]);
        if (!table) {
          ++local.missing;
          continue;
        }
        g.set_weight(i, j, score(*table, measure));
        ++local.scored;
      } catch (const UndefinedForTable&) {
        ++local.undefined;
      } catch (const InvalidCounts&) {
        ++local.invalid;
      }
    }
  }
  if (stats) *stats = local;
  return g;
}

inline WordGraph build_word_graph(const std::vector<Occurrence>& players,
                                  const CooccurrenceStore& counts, AssociationMeasure measure,
                                  GraphStats* stats = nullptr) {
  std::vector<std::string> keys;
  keys.reserve(players.size());
  for (const auto& p : players) keys.push_back(p.lemma);
  return build_word_graph(players, keys, counts, measure, stats);
}

// Raises the weight of every pair of content players that lie within
// `policy.n` content tokens of each other in the same document by the mean
// positive weight of `g`. Stop-word players take no part in the n-gram
// graph and are skipped when distances are counted. The increment is fixed
// before any edge is touched; if `g` has no positive edge it is 1.
inline WordGraph augment_with_ngram(const WordGraph& g, const NgramPolicy& policy) {
  WordGraph out = g;
  if (policy.n == 0 || g.size() < 2) return out;
  double increment = g.mean_positive_weight();
  if (increment <= 0.0) increment = 1.0;

  // Content-token rank of each non-stop-word player within its document.
  std::map<std::string, std::vector<std::size_t>> by_doc;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!policy.stopwords.count(g.players[i].lemma)) by_doc[g.players[i].doc_id].push_back(i);

  for (auto& [doc, members] : by_doc) {
    std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return g.players[a].position < g.players[b].position;
    });
    std::vector<std::size_t> rank(members.size());
    for (std::size_t k = 1; k < members.size(); ++k) {
      const bool same = g.players[members[k]].position == g.players[members[k - 1]].position;
      rank[k] = rank[k - 1] + (same ? 0 : 1);
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size() && rank[b] - rank[a] <= policy.n; ++b) {
        const std::size_t i = members[a], j = members[b];
        out.set_weight(i, j, out.weight(i, j) + increment);
      }
    }
  }
  return out;
}

// Picks the lookup word for `lemma`: the lemma itself when the store knows
// it, otherwise the alternative lexicalization with the largest summed
// co-occurrence against `context` (first in resource order on ties).
inline std::string expand_query(const std::string& lemma,
                                const std::vector<std::string>& alternatives,
                                const CooccurrenceStore& counts,
                                const std::vector<std::string>& context) {
  if (counts.contains(lemma)) return lemma;
  const std::string* best = nullptr;
  Count best_sum = -1;
  for (const auto& alt : alternatives) {
    if (!counts.contains(alt)) continue;
    Count sum = 0;
    for (const auto& c : context) sum += counts.pair_count(alt, c).value_or(0);
    if (sum > best_sum) {
      best_sum = sum;
      best = &alt;
    }
  }
  if (!best) throw NoAlternativeFound("no lexicalization of '" + lemma + "' in the count store");
  return *best;
}

// Upper-triangle edge list, "#players N" header, nonzero weights only.
inline void save_graph(const WordGraph& g, std::ostream& os) {
  os << "#players " << g.size() << '\n';
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.weight(i, j) != 0.0)
        os << i << '\t' << j << '\t' << tsv::format_double(g.weight(i, j)) << '\n';
}

inline void save_graph(const WordGraph& g, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot write " + path);
  save_graph(g, os);
}

inline WordGraph load_graph(const std::string& path, const std::vector<Occurrence>& players) {
  tsv::Reader reader(path);
  bool have_header = false;
  reader.on_comment = [&](const std::string& line) {
    if (line.rfind("#players", 0) != 0) return;
    const auto n = reader.to_int<std::size_t>(std::string_view(line).substr(8), "player count");
    if (n != players.size()) {
      reader.fail("graph has " + std::to_string(n) + " players, occurrences give " +
                  std::to_string(players.size()));
    }
    have_header = true;
  };
  WordGraph g{players, Matrix(players.size(), players.size())};
  std::string line;
  while (reader.next(line)) {
    auto f = reader.fields(line, 3);
    const auto i = reader.to_int<std::size_t>(f[0], "player index");
    const auto j = reader.to_int<std::size_t>(f[1], "player index");
    if (i >= players.size() || j >= players.size()) reader.fail("player index out of range");
    if (i == j) reader.fail("self loop");
    g.set_weight(i, j, reader.to_real(f[2], "weight"));
  }
  if (!have_header) throw ParseError(path, 0, "missing '#players N' header");
  return g;
}

}  // namespace wsdgame

#endif  // WSDGAME_GRAPH_HPP_
