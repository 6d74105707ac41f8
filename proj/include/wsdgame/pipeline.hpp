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

#ifndef WSDGAME_PIPELINE_HPP_
#define WSDGAME_PIPELINE_HPP_

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsdgame/contingency.hpp"
#include "wsdgame/counts.hpp"
#include "wsdgame/dynamics.hpp"
#include "wsdgame/eval.hpp"
#include "wsdgame/graph.hpp"
#include "wsdgame/payoff.hpp"
#include "wsdgame/senses.hpp"

namespace wsdgame {

enum class InitKind { uniform, geometric, clustered };

struct PipelineConfig {
  // Inputs. Empty means "not given".
  std::string occurrences;
  std::string counts;     // pair co-occurrence counts
  std::string unigrams;   // unigram frequencies with "#N" header
  std::string inventory;
  std::string clusters;
  std::string glosses;
  std::string relations;
  std::string taxonomy;
  std::string similarity;  // precomputed Z
  std::string gold;
  std::string stopwords;
  std::string graph;       // precomputed W; skips graph construction

  AssociationMeasure measure = AssociationMeasure::mdice;
  PayoffProvider provider = PayoffProvider::gloss_cosine_tfidf;
  std::size_t ngram = 5;
  InitKind init = InitKind::uniform;
  double p = 0.4;
  bool jcn_invert = false;
  GameConfig dynamics;

  // Outputs.
  std::string answers_out;
  std::string report_out;
  std::string trajectory_out;
};

namespace detail {

inline void require_file(const std::string& path, const char* what) {
  if (path.empty()) throw ConfigError(std::string("missing required input: ") + what);
  if (!std::filesystem::is_regular_file(path)) {
    throw IoError(std::string(what) + " file not found: " + path);
  }
}

inline void optional_file(const std::string& path, const char* what) {
  if (!path.empty()) require_file(path, what);
}

}  // namespace detail

// Checks that every input the configuration needs is named and exists.
inline void validate(const PipelineConfig& cfg, bool need_payoffs = true) {
  detail::require_file(cfg.occurrences, "occurrences");
  detail::require_file(cfg.inventory, "inventory");
  if (cfg.graph.empty()) {
    detail::require_file(cfg.counts, "counts");
    detail::require_file(cfg.unigrams, "unigrams");
  } else {
    detail::require_file(cfg.graph, "graph");
  }
  detail::optional_file(cfg.stopwords, "stopwords");
  detail::optional_file(cfg.gold, "gold");
  detail::optional_file(cfg.clusters, "clusters");
  if (cfg.init == InitKind::clustered) detail::require_file(cfg.clusters, "clusters");
  if (cfg.init != InitKind::uniform && !(cfg.p > 0.0 && cfg.p < 1.0)) {
    throw ConfigError("p must lie in (0, 1)");
  }
  cfg.dynamics.validate();
  if (!need_payoffs) return;
  switch (cfg.provider) {
    case PayoffProvider::wup:
    case PayoffProvider::jcn: detail::require_file(cfg.taxonomy, "taxonomy"); break;
    case PayoffProvider::gloss_cosine_tfidf:
    case PayoffProvider::gloss_cosine_raw:
      detail::require_file(cfg.glosses, "glosses");
      detail::optional_file(cfg.relations, "relations");
      break;
    case PayoffProvider::precomputed: detail::require_file(cfg.similarity, "similarity"); break;
  }
}

// The word graph of a text together with the players it was built over.
struct GraphBuild {
  std::vector<Occurrence> occurrences;  // everything in the occurrence file
  std::vector<Occurrence> players;      // occurrences with a sense inventory
  SenseInventory inventory;
  WordGraph graph;
  GraphStats stats;
  std::size_t expanded = 0;  // players looked up under a substitute lemma
};

// Loads the text and the lexical resource and builds the (augmented) word
// graph, or loads it from cfg.graph when given.
inline GraphBuild build_graph(const PipelineConfig& cfg) {
  GraphBuild b;
  b.occurrences = load_occurrences(cfg.occurrences);
  b.inventory = SenseInventory::load(cfg.inventory);
  if (!cfg.clusters.empty()) b.inventory.load_clusters(cfg.clusters);
  for (const auto& occ : b.occurrences)
    if (b.inventory.covers(occ)) b.players.push_back(occ);

  if (!cfg.graph.empty()) {
    b.graph = load_graph(cfg.graph, b.players);
    return b;
  }

  const CooccurrenceStore counts = CooccurrenceStore::load(cfg.counts, cfg.unigrams);
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < b.players.size(); ++i) {
    const Occurrence& p = b.players[i];
    std::vector<std::string> context;
    for (std::size_t j = 0; j < b.players.size(); ++j)
      if (j != i && b.players[j].doc_id == p.doc_id) context.push_back(b.players[j].lemma);
    try {
      keys.push_back(expand_query(p.lemma, b.inventory.alternatives(p.lemma, p.pos), counts, context));
      if (keys.back() != p.lemma) ++b.expanded;
    } catch (const NoAlternativeFound&) {
      keys.push_back(p.lemma);
    }
  }
  const WordGraph raw = build_word_graph(b.players, keys, counts, cfg.measure, &b.stats);
  NgramPolicy policy{cfg.ngram, {}};
  if (!cfg.stopwords.empty()) policy.stopwords = load_stopwords(cfg.stopwords);
  b.graph = augment_with_ngram(raw, policy);
  return b;
}

inline StrategyState initial_state(const PipelineConfig& cfg, const SenseInventory& inv,
                                   const std::vector<Occurrence>& players) {
  switch (cfg.init) {
    case InitKind::uniform: return init_uniform(inv, players);
    case InitKind::geometric: return init_geometric(inv, players, cfg.p);
    case InitKind::clustered: return init_clustered(inv, players, cfg.p);
  }
  return init_uniform(inv, players);
}

inline PayoffStore payoff_store(const PipelineConfig& cfg, const std::vector<std::string>& concepts) {
  PayoffResources res;
  res.jcn_invert = cfg.jcn_invert;
  std::optional<Taxonomy> tax;
  std::optional<std::map<std::string, GlossVector>> vectors;
  std::optional<PrecomputedSimilarity> pre;
  switch (cfg.provider) {
    case PayoffProvider::wup:
    case PayoffProvider::jcn:
      tax = Taxonomy::load(cfg.taxonomy);
      res.taxonomy = &*tax;
      break;
    case PayoffProvider::gloss_cosine_tfidf:
    case PayoffProvider::gloss_cosine_raw: {
      GlossStore glosses;
      glosses.load_glosses(cfg.glosses);
      if (!cfg.relations.empty()) glosses.load_relations(cfg.relations);
      vectors = build_gloss_vectors(glosses, cfg.provider == PayoffProvider::gloss_cosine_tfidf
                                                 ? GlossWeighting::tfidf
                                                 : GlossWeighting::raw);
      res.gloss_vectors = &*vectors;
      break;
    }
    case PayoffProvider::precomputed:
      pre = PrecomputedSimilarity::load(cfg.similarity);
      res.precomputed = &*pre;
      break;
  }
  return build_payoff_store(concepts, cfg.provider, res);
}

struct PipelineResult {
  GraphBuild build;
  PayoffStore payoffs;
  GameOutcome outcome;
  AnswerSet answers;  // one per scored occurrence, in file order
  std::optional<ScoreReport> report;
};

// Runs the whole disambiguation: graph, strategy space, payoffs, dynamics,
// labeling and (when a gold file is given) scoring. Writes nothing.
inline PipelineResult run_pipeline(const PipelineConfig& cfg) {
  validate(cfg);
  PipelineResult r;
  r.build = build_graph(cfg);
  const StrategyState s0 = initial_state(cfg, r.build.inventory, r.build.players);
  r.payoffs = payoff_store(cfg, s0.concepts);
  GameConfig dyn = cfg.dynamics;
  dyn.record_trajectory = dyn.record_trajectory || !cfg.trajectory_out.empty();
  r.outcome = run(s0, r.build.graph.weights, r.payoffs, dyn);

  // Players dropped for lack of senses stay in the answer set, unassigned.
  const AnswerSet played = label(r.outcome, r.build.players);
  std::size_t k = 0;
  for (const auto& occ : r.build.occurrences) {
    if (!occ.scored()) continue;
    if (r.build.inventory.covers(occ)) {
      r.answers.push_back(played[k++]);
    } else {
      r.answers.push_back(LabeledAnswer{occ.instance_id, occ.pos, std::nullopt, 0.0});
    }
  }
  if (!cfg.gold.empty()) r.report = score(r.answers, GoldStandard::load(cfg.gold));
  return r;
}

inline void write_outputs(const PipelineConfig& cfg, const PipelineResult& r) {
  if (!cfg.answers_out.empty()) save_answers(r.answers, cfg.answers_out);
  if (!cfg.report_out.empty() && r.report) {
    std::ofstream os(cfg.report_out);
    if (!os) throw IoError("cannot write " + cfg.report_out);
    write_report_tsv(*r.report, os);
  }
  if (!cfg.trajectory_out.empty()) write_trajectory(r.outcome, cfg.trajectory_out);
}

struct ConfigEntry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

// Flat "key = value" configuration file; "#" starts a comment line.
inline std::vector<ConfigEntry> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path);
  std::vector<ConfigEntry> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto t = tsv::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) throw ParseError(path, no, "expected 'key = value'");
    const auto key = tsv::trim(t.substr(0, eq));
    if (key.empty()) throw ParseError(path, no, "empty key");
    out.push_back({std::string(key), std::string(tsv::trim(t.substr(eq + 1))), no});
  }
  return out;
}

}  // namespace wsdgame

#endif  // WSDGAME_PIPELINE_HPP_
