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

#ifndef WSDGAME_PAYOFF_HPP_
#define WSDGAME_PAYOFF_HPP_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wsdgame/matrix.hpp"
#include "wsdgame/tsv.hpp"

namespace wsdgame {

// ---------------------------------------------------------------------------
// Taxonomy measures

struct TaxonomyNode {
  int depth = 1;              // root = 1
  std::optional<double> ic;   // information content, if known
  std::string parent;         // "" for a root
};

class Taxonomy {
 public:
  // concept_id<TAB>depth<TAB>ic<TAB>parent_id. A parent of "-" or "" marks a
  // root; an ic of "-" or "" marks missing information content.
  static Taxonomy load(const std::string& path) {
    Taxonomy tax;
    tsv::Reader reader(path);
    std::string line;
    while (reader.next(line)) {
      auto f = reader.fields(line, 4);
      TaxonomyNode node;
      node.depth = reader.to_int<int>(f[1], "depth");
      if (node.depth < 1) reader.fail("depth must be >= 1");
      const auto ic = tsv::trim(f[2]);
      if (!ic.empty() && ic != "-") {
        node.ic = reader.to_real(ic, "information content");
        if (*node.ic < 0) reader.fail("information content must be >= 0");
      }
      const auto parent = tsv::trim(f[3]);
      if (parent != "-") node.parent = std::string(parent);
      if (!tax.nodes_.emplace(f[0], std::move(node)).second) {
        reader.fail("duplicate concept '" + f[0] + "'");
      }
    }
    return tax;
  }

  void add(const std::string& id, int depth, std::optional<double> ic, std::string parent = {}) {
    nodes_[id] = TaxonomyNode{depth, ic, std::move(parent)};
  }

  const TaxonomyNode* find(const std::string& id) const {
    auto it = nodes_.find(id);
    return it == nodes_.end() ? nullptr : &it->second;
  }

  // `id` followed by its ancestors up to the root. Stops at a parent that is
  // not in the taxonomy or at a cycle.
  std::vector<std::string> ancestors(const std::string& id) const {
    std::vector<std::string> chain;
    std::unordered_set<std::string> seen;
    std::string cur = id;
    while (!cur.empty() && find(cur) && seen.insert(cur).second) {
      chain.push_back(cur);
      cur = find(cur)->parent;
    }
    return chain;
  }

  // Most specific (deepest) shared ancestor.
  std::optional<std::string> msa(const std::string& a, const std::string& b) const {
    const auto up_a = ancestors(a);
    const std::unordered_set<std::string> set_a(up_a.begin(), up_a.end());
    std::optional<std::string> best;
    int best_depth = 0;
    for (const auto& c : ancestors(b)) {
      if (set_a.count(c) && find(c)->depth > best_depth) {
        best = c;
        best_depth = find(c)->depth;
      }
    }
    return best;
  }

 private:
  std::unordered_map<std::string, TaxonomyNode> nodes_;
};

// 2 * depth(msa) / (depth(a) + depth(b)); 0 when the concepts share no
// ancestor or are unknown.
inline double wup(const std::string& a, const std::string& b, const Taxonomy& tax) {
  const TaxonomyNode* na = tax.find(a);
  const TaxonomyNode* nb = tax.find(b);
  if (!na || !nb) return 0.0;
  const auto m = tax.msa(a, b);
  if (!m) return 0.0;
  return 2.0 * tax.find(*m)->depth / static_cast<double>(na->depth + nb->depth);
}

inline constexpr double kJcnEpsilon = 1e-9;
inline constexpr double kJcnCap = 1e9;

// IC(a) + IC(b) - 2 IC(msa). This is a distance (0 for identical
// concepts); with `invert` it is mapped to min(1/(d + 1e-9), 1e9) so that
// larger means more similar. Missing IC or no shared ancestor gives 0.
inline double jcn(const std::string& a, const std::string& b, const Taxonomy& tax,
                  bool invert = false) {
  const TaxonomyNode* na = tax.find(a);
  const TaxonomyNode* nb = tax.find(b);
  if (!na || !nb || !na->ic || !nb->ic) return 0.0;
  const auto m = tax.msa(a, b);
  if (!m || !tax.find(*m)->ic) return 0.0;
  const double d = *na->ic + *nb->ic - 2.0 * *tax.find(*m)->ic;
  if (!invert) return d;
  return std::min(1.0 / (d + kJcnEpsilon), kJcnCap);
}

// ---------------------------------------------------------------------------
// Gloss vectors

using GlossVector = std::map<std::string, double>;

enum class GlossWeighting { tfidf, raw };

// Lowercased alphanumeric runs; bytes >= 0x80 are kept as word characters.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char ch : text) {
    if (std::isalnum(ch) || ch >= 0x80) {
      cur.push_back(static_cast<char>(std::tolower(ch)));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

struct GlossStore {
  std::map<std::string, std::string> glosses;                  // concept -> text
  std::map<std::string, std::vector<std::string>> relations;   // concept -> related

  // concept_id<TAB>gloss text
  void load_glosses(const std::string& path) {
    tsv::Reader reader(path);
    std::string line;
    while (reader.next(line)) {
      const auto tab = line.find('\t');
      if (tab == std::string::npos) reader.fail("expected concept_id<TAB>gloss");
      const std::string id(tsv::trim(std::string_view(line).substr(0, tab)));
      if (!glosses.emplace(id, line.substr(tab + 1)).second) {
        reader.fail("duplicate gloss for '" + id + "'");
      }
    }
  }

  // concept_id<TAB>related_id; the first concept borrows the second's gloss.
  void load_relations(const std::string& path) {
    tsv::Reader reader(path);
    std::string line;
    while (reader.next(line)) {
      auto f = reader.fields(line, 2);
      relations[f[0]].push_back(f[1]);
    }
  }
};

// One vector per glossed concept, built from its super-gloss: its own gloss
// plus the glosses of concepts it is directly related to. `raw` keeps term
// counts; `tfidf` multiplies them by log(N/df) over the N super-glosses.
inline std::map<std::string, GlossVector> build_gloss_vectors(const GlossStore& store,
                                                              GlossWeighting weighting) {
  std::map<std::string, GlossVector> vectors;
  for (const auto& [id, text] : store.glosses) {
    GlossVector& v = vectors[id];
    for (auto& t : tokenize(text)) v[t] += 1.0;
    auto rel = store.relations.find(id);
    if (rel == store.relations.end()) continue;
    for (const auto& other : rel->second) {
      if (other == id) continue;
      auto g = store.glosses.find(other);
      if (g == store.glosses.end()) continue;
      for (auto& t : tokenize(g->second)) v[t] += 1.0;
    }
  }
  if (weighting == GlossWeighting::tfidf) {
    std::map<std::string, double> df;
    for (const auto& [id, v] : vectors)
      for (const auto& [term, tf] : v) df[term] += 1.0;
    const double n = static_cast<double>(vectors.size());
    for (auto& [id, v] : vectors)
      for (auto& [term, w] : v) w *= std::log(n / df[term]);
  }
  return vectors;
}

// v_a . v_b / (|v_a| |v_b|); 0 if either vector is zero.
inline double cosine(const GlossVector& a, const GlossVector& b) {
  const GlossVector& small = a.size() <= b.size() ? a : b;
  const GlossVector& large = a.size() <= b.size() ? b : a;
  double dot = 0.0;
  for (const auto& [term, w] : small) {
    auto it = large.find(term);
    if (it != large.end()) dot += w * it->second;
  }
  double na = 0.0, nb = 0.0;
  for (const auto& [term, w] : a) na += w * w;
  for (const auto& [term, w] : b) nb += w * w;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

// ---------------------------------------------------------------------------
// Sense-similarity matrix

enum class PayoffProvider { wup, jcn, gloss_cosine_tfidf, gloss_cosine_raw, precomputed };

inline std::string_view to_string(PayoffProvider p) {
  switch (p) {
    case PayoffProvider::wup: return "wup";
    case PayoffProvider::jcn: return "jcn";
    case PayoffProvider::gloss_cosine_tfidf: return "tfidf";
    case PayoffProvider::gloss_cosine_raw: return "vec";
    case PayoffProvider::precomputed: return "precomputed";
  }
  return "?";
}

inline std::optional<PayoffProvider> parse_provider(std::string_view name) {
  if (name == "wup") return PayoffProvider::wup;
  if (name == "jcn") return PayoffProvider::jcn;
  if (name == "tfidf" || name == "gloss_cosine_tfidf") return PayoffProvider::gloss_cosine_tfidf;
  if (name == "vec" || name == "raw" || name == "gloss_cosine_raw")
    return PayoffProvider::gloss_cosine_raw;
  if (name == "precomputed") return PayoffProvider::precomputed;
  return std::nullopt;
}

// Pairwise similarities read from concept_a<TAB>concept_b<TAB>similarity;
// absent pairs are 0.
class PrecomputedSimilarity {
 public:
  static PrecomputedSimilarity load(const std::string& path) {
    PrecomputedSimilarity sim;
    tsv::Reader reader(path);
    std::string line;
    while (reader.next(line)) {
      auto f = reader.fields(line, 3);
      const double v = reader.to_real(f[2], "similarity");
      if (!std::isfinite(v)) reader.fail("similarity must be finite");
      if (!sim.values_.emplace(key(f[0], f[1]), v).second) {
        reader.fail("duplicate pair '" + f[0] + "' / '" + f[1] + "'");
      }
    }
    return sim;
  }

  void set(const std::string& a, const std::string& b, double v) { values_[key(a, b)] = v; }

  double get(const std::string& a, const std::string& b) const {
    auto it = values_.find(key(a, b));
    return it == values_.end() ? 0.0 : it->second;
  }

 private:
  static std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  }
  std::map<std::pair<std::string, std::string>, double> values_;
};

// Inputs a provider may need; only the ones matching the provider are read.
struct PayoffResources {
  const Taxonomy* taxonomy = nullptr;
  const std::map<std::string, GlossVector>* gloss_vectors = nullptr;
  const PrecomputedSimilarity* precomputed = nullptr;
  bool jcn_invert = false;
};

// c x c sense-similarity matrix over the global concept list. The diagonal
// is 0: a concept never pays off against itself.
class PayoffStore {
 public:
  PayoffStore() = default;
  PayoffStore(std::vector<std::string> concepts, Matrix z, PayoffProvider provider)
      : concepts_(std::move(concepts)), z_(std::move(z)), provider_(provider) {
    for (std::size_t k = 0; k < concepts_.size(); ++k) index_.emplace(concepts_[k], k);
  }

  const std::vector<std::string>& concepts() const { return concepts_; }
  const Matrix& z() const { return z_; }
  PayoffProvider provider() const { return provider_; }
  std::size_t warnings() const { return warnings_; }
  void set_warnings(std::size_t w) { warnings_ = w; }

  std::size_t index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownConcept("unknown concept '" + id + "'");
    return it->second;
  }

  // Payoff of player i playing column a against player j playing column b.
  // The store is player-independent.
  double payoff(std::size_t /*i*/, std::size_t /*j*/, std::size_t a, std::size_t b) const {
    return z_(a, b);
  }

  // Writes the upper triangle as concept_a<TAB>concept_b<TAB>similarity.
  void save(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw IoError("cannot write " + path);
    for (std::size_t a = 0; a < concepts_.size(); ++a)
      for (std::size_t b = a + 1; b < concepts_.size(); ++b)
        if (z_(a, b) != 0.0)
          os << concepts_[a] << '\t' << concepts_[b] << '\t' << tsv::format_double(z_(a, b))
             << '\n';
  }

 private:
  std::vector<std::string> concepts_;
  std::unordered_map<std::string, std::size_t> index_;
  Matrix z_;
  PayoffProvider provider_ = PayoffProvider::precomputed;
  std::size_t warnings_ = 0;
};

// Computes every pairwise similarity once. A pair the provider cannot score
// (concept missing from the taxonomy or without a gloss vector) gets 0 and
// is counted in warnings().
inline PayoffStore build_payoff_store(const std::vector<std::string>& concepts,
                                      PayoffProvider provider, const PayoffResources& res) {
  const std::size_t c = concepts.size();
  Matrix z(c, c);
  std::size_t warnings = 0;

  auto need = [&](const void* ptr, const char* what) {
    if (!ptr) throw ConfigError(std::string("payoff provider needs ") + what);
  };
  std::vector<bool> known(c, true);
  switch (provider) {
    case PayoffProvider::wup:
    case PayoffProvider::jcn:
      need(res.taxonomy, "a taxonomy");
      for (std::size_t k = 0; k < c; ++k) known[k] = res.taxonomy->find(concepts[k]) != nullptr;
      break;
    case PayoffProvider::gloss_cosine_tfidf:
    case PayoffProvider::gloss_cosine_raw:
      need(res.gloss_vectors, "gloss vectors");
      for (std::size_t k = 0; k < c; ++k) known[k] = res.gloss_vectors->count(concepts[k]) != 0;
      break;
    case PayoffProvider::precomputed:
      need(res.precomputed, "a precomputed similarity file");
      break;
  }

  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = a + 1; b < c; ++b) {
      if (!known[a] || !known[b]) {
        ++warnings;
        continue;
      }
      double v = 0.0;
      switch (provider) {
        case PayoffProvider::wup: v = wup(concepts[a], concepts[b], *res.taxonomy); break;
        case PayoffProvider::jcn:
          v = jcn(concepts[a], concepts[b], *res.taxonomy, res.jcn_invert);
          break;
        case PayoffProvider::gloss_cosine_tfidf:
        case PayoffProvider::gloss_cosine_raw:
          v = cosine(res.gloss_vectors->at(concepts[a]), res.gloss_vectors->at(concepts[b]));
          break;
        case PayoffProvider::precomputed: v = res.precomputed->get(concepts[a], concepts[b]); break;
      }
      if (!std::isfinite(v)) {
        ++warnings;
        v = 0.0;
      }
      z(a, b) = v;
      z(b, a) = v;
    }
  }
  PayoffStore store(concepts, std::move(z), provider);
  store.set_warnings(warnings);
  return store;
}

// The m_i x m_j block of Z for the inventories Mi and Mj.
inline Matrix partial_payoff(const PayoffStore& store, const std::vector<std::string>& mi,
                             const std::vector<std::string>& mj) {
  std::vector<std::size_t> rows, cols;
  for (const auto& id : mi) rows.push_back(store.index_of(id));
  for (const auto& id : mj) cols.push_back(store.index_of(id));
  Matrix out(rows.size(), cols.size());
  for (std::size_t h = 0; h < rows.size(); ++h)
    for (std::size_t k = 0; k < cols.size(); ++k) out(h, k) = store.z()(rows[h], cols[k]);
  return out;
}

}  // namespace wsdgame

#endif  // WSDGAME_PAYOFF_HPP_
