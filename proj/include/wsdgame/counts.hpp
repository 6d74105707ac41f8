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

#ifndef WSDGAME_COUNTS_HPP_
#define WSDGAME_COUNTS_HPP_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "wsdgame/contingency.hpp"
#include "wsdgame/tsv.hpp"

namespace wsdgame {

// Precomputed corpus statistics: unigram frequencies, unordered pair
// co-occurrence counts and the corpus size N.
//
// Files:
//   pairs     word_a<TAB>word_b<TAB>o11
//   unigrams  word<TAB>frequency, with a "#N <total>" header line
class CooccurrenceStore {
 public:
  CooccurrenceStore() = default;

  static CooccurrenceStore load(const std::string& pairs_path,
                                const std::string& unigrams_path) {
    CooccurrenceStore store;
    std::optional<Count> total;
    auto read_total = [&](tsv::Reader& reader) {
      reader.on_comment = [&](const std::string& line) {
        if (line.rfind("#N", 0) != 0) return;
        total = reader.to_int<Count>(std::string_view(line).substr(2), "corpus size");
      };
    };

    tsv::Reader uni(unigrams_path);
    read_total(uni);
    std::string line;
    while (uni.next(line)) {
      auto f = uni.fields(line, 2);
      const Count freq = uni.to_int<Count>(f[1], "frequency");
      if (freq < 0) uni.fail("negative frequency");
      if (!store.unigrams_.emplace(f[0], freq).second) uni.fail("duplicate word '" + f[0] + "'");
    }

    tsv::Reader pairs(pairs_path);
    read_total(pairs);
    while (pairs.next(line)) {
      auto f = pairs.fields(line, 3);
      const Count o11 = pairs.to_int<Count>(f[2], "co-occurrence count");
      if (o11 < 0) pairs.fail("negative co-occurrence count");
      if (!store.pairs_.emplace(key(f[0], f[1]), o11).second) {
        pairs.fail("duplicate pair '" + f[0] + "' / '" + f[1] + "'");
      }
    }

    if (!total) throw ParseError(unigrams_path, 0, "missing '#N <total>' header");
    if (*total <= 0) throw ParseError(unigrams_path, 0, "corpus size must be positive");
    store.total_ = *total;
    return store;
  }

  void set_total(Count n) { total_ = n; }
  void add_unigram(const std::string& w, Count freq) { unigrams_[w] = freq; }
  void add_pair(const std::string& a, const std::string& b, Count o11) { pairs_[key(a, b)] = o11; }

  Count total() const { return total_; }
  bool empty() const { return pairs_.empty(); }
  bool contains(const std::string& w) const { return unigrams_.count(w) != 0; }

  std::optional<Count> frequency(const std::string& w) const {
    auto it = unigrams_.find(w);
    if (it == unigrams_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<Count> pair_count(const std::string& a, const std::string& b) const {
    auto it = pairs_.find(key(a, b));
    if (it == pairs_.end()) return std::nullopt;
    return it->second;
  }

  // Contingency table of (a, b); empty when the pair or either word is
  // missing from the store. Throws InvalidCounts on inconsistent data.
  std::optional<ContingencyTable> table(const std::string& a, const std::string& b) const {
    auto o11 = pair_count(a, b);
    auto r1 = frequency(a);
    auto c1 = frequency(b);
    if (!o11 || !r1 || !c1 || total_ <= 0) return std::nullopt;
    return table_from_counts(*o11, *r1, *c1, total_);
  }

  const std::map<std::pair<std::string, std::string>, Count>& pairs() const { return pairs_; }

 private:
  static std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  std::unordered_map<std::string, Count> unigrams_;
  std::map<std::pair<std::string, std::string>, Count> pairs_;
  Count total_ = 0;
};

}  // namespace wsdgame

#endif  // WSDGAME_COUNTS_HPP_
