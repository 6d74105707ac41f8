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

// Test-only reference formulas, written straight from the textbook
// definitions over the raw cells and independent of the library's code
// paths. Shared by the unit and acceptance suites.

#ifndef WSDGAME_TESTS_NAIVE_ORACLES_HPP_
#define WSDGAME_TESTS_NAIVE_ORACLES_HPP_

#include <cmath>
#include <optional>
#include <string>

namespace oracle {

struct Cells {
  double a, b, c, d;  // o11, o12, o21, o22
};

inline std::optional<double> measure(const std::string& name, const Cells& t) {
  const double N = t.a + t.b + t.c + t.d;
  const double R1 = t.a + t.b, R2 = t.c + t.d, C1 = t.a + t.c, C2 = t.b + t.d;
  const double E11 = R1 * C1 / N, E12 = R1 * C2 / N, E21 = R2 * C1 / N, E22 = R2 * C2 / N;
  if (name == "dice") {
    if (R1 + C1 == 0) return std::nullopt;
    return 2 * t.a / (R1 + C1);
  }
  if (name == "mdice") {
    if (t.a <= 0) return std::nullopt;
    return std::log(t.a) / std::log(2.0) * (2 * t.a / (R1 + C1));
  }
  if (name == "pmi") {
    if (t.a <= 0) return std::nullopt;
    return std::log(t.a / E11) / std::log(2.0);
  }
  if (name == "t_score") {
    if (t.a <= 0) return std::nullopt;
    return (t.a - E11) / std::sqrt(t.a);
  }
  if (name == "z_score") {
    if (E11 <= 0) return std::nullopt;
    return (t.a - E11) / std::sqrt(E11);
  }
  if (name == "odds_r") {
    return std::log((t.a + 0.5) * (t.d + 0.5) / ((t.b + 0.5) * (t.c + 0.5)));
  }
  if (name == "chi_s") {
    if (E11 <= 0 || E12 <= 0 || E21 <= 0 || E22 <= 0) return std::nullopt;
    return std::pow(t.a - E11, 2) / E11 + std::pow(t.b - E12, 2) / E12 +
           std::pow(t.c - E21, 2) / E21 + std::pow(t.d - E22, 2) / E22;
  }
  if (name == "chi_s_c") {
    if (R1 * R2 * C1 * C2 == 0) return std::nullopt;
    return N * std::pow(std::fabs(t.a * t.d - t.b * t.c) - N / 2, 2) / (R1 * R2 * C1 * C2);
  }
  return std::nullopt;
}

}  // namespace oracle

#endif  // WSDGAME_TESTS_NAIVE_ORACLES_HPP_
