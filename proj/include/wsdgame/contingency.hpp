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

#ifndef WSDGAME_CONTINGENCY_HPP_
#define WSDGAME_CONTINGENCY_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "wsdgame/error.hpp"

namespace wsdgame {

using Count = std::int64_t;

// 2x2 table of observed co-occurrence counts for a word pair (w_i, w_j)
// together with its marginals and the expected frequencies under
// independence, E_hk = R_h * C_k / N.
//
//              w_j    !w_j
//     w_i      o11    o12   | r1
//    !w_i      o21    o22   | r2
//              c1     c2    | n
struct ContingencyTable {
  Count o11 = 0, o12 = 0, o21 = 0, o22 = 0;
  Count r1 = 0, r2 = 0, c1 = 0, c2 = 0, n = 0;
  double e11 = 0.0, e12 = 0.0, e21 = 0.0, e22 = 0.0;

  // Same pair with the two words swapped.
  ContingencyTable transposed() const {
    ContingencyTable t = *this;
    std::swap(t.o12, t.o21);
    std::swap(t.r1, t.c1);
    std::swap(t.r2, t.c2);
    std::swap(t.e12, t.e21);
    return t;
  }
};

// Builds the full table from the joint count and the two marginals.
inline ContingencyTable table_from_counts(Count o11, Count r1, Count c1, Count n) {
  if (n <= 0) throw InvalidCounts("corpus size must be positive");
  ContingencyTable t;
  t.o11 = o11;
  t.o12 = r1 - o11;
  t.o21 = c1 - o11;
  t.o22 = n - r1 - c1 + o11;
  if (o11 < 0 || t.o12 < 0 || t.o21 < 0 || t.o22 < 0) {
    throw InvalidCounts("inconsistent counts: o11=" + std::to_string(o11) +
                        " r1=" + std::to_string(r1) + " c1=" + std::to_string(c1) +
                        " n=" + std::to_string(n));
  }
  t.r1 = r1;
  t.r2 = n - r1;
  t.c1 = c1;
  t.c2 = n - c1;
  t.n = n;
  const double dn = static_cast<double>(n);
  t.e11 = static_cast<double>(t.r1) * static_cast<double>(t.c1) / dn;
  t.e12 = static_cast<double>(t.r1) * static_cast<double>(t.c2) / dn;
  t.e21 = static_cast<double>(t.r2) * static_cast<double>(t.c1) / dn;
  t.e22 = static_cast<double>(t.r2) * static_cast<double>(t.c2) / dn;
  return t;
}

enum class AssociationMeasure { dice, mdice, pmi, t_score, z_score, odds_r, chi_s, chi_s_c };

inline constexpr std::array<AssociationMeasure, 8> kAllMeasures = {
    AssociationMeasure::dice,    AssociationMeasure::mdice,  AssociationMeasure::pmi,
    AssociationMeasure::t_score, AssociationMeasure::z_score, AssociationMeasure::odds_r,
    AssociationMeasure::chi_s,   AssociationMeasure::chi_s_c};

inline std::string_view to_string(AssociationMeasure m) {
  switch (m) {
    case AssociationMeasure::dice: return "dice";
    case AssociationMeasure::mdice: return "mdice";
    case AssociationMeasure::pmi: return "pmi";
    case AssociationMeasure::t_score: return "t_score";
    case AssociationMeasure::z_score: return "z_score";
    case AssociationMeasure::odds_r: return "odds_r";
    case AssociationMeasure::chi_s: return "chi_s";
    case AssociationMeasure::chi_s_c: return "chi_s_c";
  }
  return "?";
}

// Accepts both "t_score" and "t-score" spellings.
inline std::optional<AssociationMeasure> parse_measure(std::string_view name) {
  std::string key(name);
  for (char& ch : key)
    if (ch == '-') ch = '_';
  for (AssociationMeasure m : kAllMeasures)
    if (to_string(m) == key) return m;
  return std::nullopt;
}

// Association strength of the pair under measure `m`. Throws
// UndefinedForTable when the formula is undefined on this table (a zero
// inside a log or a zero denominator); callers building a graph map that to
// a zero-weight edge. Negative scores are returned as is.
inline double score(const ContingencyTable& t, AssociationMeasure m) {
  const double o11 = static_cast<double>(t.o11);
  const double o12 = static_cast<double>(t.o12);
  const double o21 = static_cast<double>(t.o21);
  const double o22 = static_cast<double>(t.o22);
  const double n = static_cast<double>(t.n);
  const double margins = static_cast<double>(t.r1 + t.c1);
  auto require = [&](bool ok) {
    if (!ok) {
      throw UndefinedForTable(std::string(to_string(m)) + " undefined for o11=" +
                              std::to_string(t.o11) + " r1=" + std::to_string(t.r1) +
                              " c1=" + std::to_string(t.c1) + " n=" + std::to_string(t.n));
    }
  };

  switch (m) {
    case AssociationMeasure::dice:
      require(margins > 0);
      return 2.0 * o11 / margins;
    case AssociationMeasure::mdice:
      require(t.o11 > 0);
      return std::log2(o11) * 2.0 * o11 / margins;
    case AssociationMeasure::pmi:
      require(t.o11 > 0);
      return std::log2(o11 / t.e11);
    case AssociationMeasure::t_score:
      require(t.o11 > 0);
      return (o11 - t.e11) / std::sqrt(o11);
    case AssociationMeasure::z_score:
      require(t.e11 > 0);
      return (o11 - t.e11) / std::sqrt(t.e11);
    case AssociationMeasure::odds_r:
      return std::log(((o11 + 0.5) * (o22 + 0.5)) / ((o12 + 0.5) * (o21 + 0.5)));
    case AssociationMeasure::chi_s: {
      require(t.e11 > 0 && t.e12 > 0 && t.e21 > 0 && t.e22 > 0);
      const double d11 = o11 - t.e11, d12 = o12 - t.e12;
      const double d21 = o21 - t.e21, d22 = o22 - t.e22;
      return d11 * d11 / t.e11 + d12 * d12 / t.e12 + d21 * d21 / t.e21 + d22 * d22 / t.e22;
    }
    case AssociationMeasure::chi_s_c: {
      const double denom = static_cast<double>(t.r1) * static_cast<double>(t.r2) *
                           static_cast<double>(t.c1) * static_cast<double>(t.c2);
      require(denom > 0);
      const double d = std::fabs(o11 * o22 - o12 * o21) - n / 2.0;
      return n * d * d / denom;
    }
  }
  return 0.0;
}

}  // namespace wsdgame

#endif  // WSDGAME_CONTINGENCY_HPP_
