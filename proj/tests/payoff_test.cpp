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

#include "wsdgame/payoff.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>

namespace wsdgame {
namespace {

//          root(1)
//         /      |
//      animal(2)  plant(2)
//      /    |
//   dog(3)  cat(3)
Taxonomy small_taxonomy() {
  Taxonomy tax;
  tax.add("root", 1, 0.0);
  tax.add("animal", 2, 1.0, "root");
  tax.add("plant", 2, 1.5, "root");
  tax.add("dog", 3, 3.0, "animal");
  tax.add("cat", 3, 4.0, "animal");
  tax.add("island", 1, 0.0);  // separate hierarchy
  tax.add("noic", 2, std::nullopt, "root");
  return tax;
}

TEST(Wup, Cases) {
  const auto tax = small_taxonomy();
  EXPECT_EQ(wup("dog", "dog", tax), 1.0);
  EXPECT_DOUBLE_EQ(wup("dog", "cat", tax), 4.0 / 6.0);
  EXPECT_DOUBLE_EQ(wup("dog", "plant", tax), 2.0 / 5.0);
  EXPECT_EQ(wup("dog", "island", tax), 0.0);
  EXPECT_EQ(wup("dog", "unknown", tax), 0.0);
  EXPECT_EQ(tax.msa("dog", "cat"), "animal");
}

TEST(Jcn, RawAndInverted) {
  const auto tax = small_taxonomy();
  EXPECT_EQ(jcn("dog", "dog", tax), 0.0);
  EXPECT_DOUBLE_EQ(jcn("dog", "cat", tax), 5.0);  // 3 + 4 - 2*1
  EXPECT_DOUBLE_EQ(jcn("dog", "dog", tax, true), 1e9);
  EXPECT_NEAR(jcn("dog", "cat", tax, true), 1.0 / (5.0 + 1e-9), 1e-15);
  EXPECT_EQ(jcn("dog", "noic", tax), 0.0);
  EXPECT_EQ(jcn("dog", "island", tax), 0.0);
}

TEST(Taxonomy, LoadsFile) {
  const std::string path = ::testing::TempDir() + "/tax.tsv";
  std::ofstream(path) << "root\t1\t0\t-\nanimal\t2\t1\troot\ndog\t3\t3\tanimal\ncat\t3\t-\tanimal\n";
  const auto tax = Taxonomy::load(path);
  EXPECT_DOUBLE_EQ(wup("dog", "cat", tax), 4.0 / 6.0);
  EXPECT_EQ(jcn("dog", "cat", tax), 0.0);  // cat has no IC
  EXPECT_EQ(tax.ancestors("dog"), (std::vector<std::string>{"dog", "animal", "root"}));
  std::ofstream(path) << "root\t0\t0\t-\n";
  EXPECT_THROW(Taxonomy::load(path), ParseError);
}

TEST(GlossVectors, RawCountsAndSuperGloss) {
  GlossStore g;
  g.glosses = {{"x", "a b b"}, {"y", "c d"}, {"z", ""}};
  auto v = build_gloss_vectors(g, GlossWeighting::raw);
  EXPECT_EQ(v.at("x"), (GlossVector{{"a", 1.0}, {"b", 2.0}}));
  EXPECT_TRUE(v.at("z").empty());

  g.relations["x"] = {"y"};
  v = build_gloss_vectors(g, GlossWeighting::raw);
  EXPECT_EQ(v.at("x"), (GlossVector{{"a", 1.0}, {"b", 2.0}, {"c", 1.0}, {"d", 1.0}}));
  EXPECT_EQ(v.at("y"), (GlossVector{{"c", 1.0}, {"d", 1.0}}));
}

TEST(GlossVectors, TfidfZeroesUbiquitousTerms) {
  GlossStore g;
  g.glosses = {{"x", "the river water"}, {"y", "the money"}, {"z", "the slope water"}};
  const auto v = build_gloss_vectors(g, GlossWeighting::tfidf);
  EXPECT_EQ(v.at("x").at("the"), 0.0);
  EXPECT_DOUBLE_EQ(v.at("x").at("water"), std::log(3.0 / 2.0));
  EXPECT_DOUBLE_EQ(v.at("y").at("money"), std::log(3.0));
  // "the" is shared by x and y, but contributes nothing
  EXPECT_EQ(cosine(v.at("x"), v.at("y")), 0.0);
  EXPECT_GT(cosine(v.at("x"), v.at("z")), 0.0);
}

TEST(Tokenize, LowercasesAndSplits) {
  EXPECT_EQ(tokenize("A river-bank, (sloping)"),
            (std::vector<std::string>{"a", "river", "bank", "sloping"}));
}

TEST(Cosine, Cases) {
  const GlossVector ab{{"a", 1.0}, {"b", 1.0}};
  const GlossVector a{{"a", 1.0}};
  const GlossVector c{{"c", 2.0}};
  EXPECT_NEAR(cosine(ab, ab), 1.0, 1e-15);
  EXPECT_EQ(cosine(ab, c), 0.0);
  EXPECT_NEAR(cosine(ab, a), 0.7071067811865475, 1e-15);
  EXPECT_EQ(cosine(ab, {}), 0.0);
}

TEST(PayoffStore, GlossProviderMatchesPairwiseCosines) {
  GlossStore g;
  g.glosses = {{"x", "a b"}, {"y", "a"}, {"w", "b c c"}};
  const auto vec = build_gloss_vectors(g, GlossWeighting::raw);
  PayoffResources res;
  res.gloss_vectors = &vec;
  const std::vector<std::string> c = {"x", "y", "w"};
  const auto store = build_payoff_store(c, PayoffProvider::gloss_cosine_raw, res);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(store.z()(i, i), 0.0);
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      EXPECT_EQ(store.z()(i, j), cosine(vec.at(c[i]), vec.at(c[j])));
      EXPECT_EQ(store.z()(i, j), store.z()(j, i));
    }
  }
  EXPECT_EQ(store.warnings(), 0u);
}

TEST(PayoffStore, SingletonAndMissingConcepts) {
  const auto tax = small_taxonomy();
  PayoffResources res;
  res.taxonomy = &tax;
  const auto one = build_payoff_store({"dog"}, PayoffProvider::wup, res);
  EXPECT_EQ(one.z().rows(), 1u);
  const auto s = build_payoff_store({"dog", "cat", "ghost"}, PayoffProvider::wup, res);
  EXPECT_DOUBLE_EQ(s.z()(0, 1), 4.0 / 6.0);
  EXPECT_EQ(s.z()(0, 2), 0.0);
  EXPECT_EQ(s.warnings(), 2u);
  EXPECT_THROW(build_payoff_store({"dog"}, PayoffProvider::jcn, PayoffResources{}), ConfigError);
}

TEST(PayoffStore, PrecomputedRoundTripIsExact) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<std::string> c = {"a", "b", "c", "d"};
  PrecomputedSimilarity sim;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (i + j != 3) sim.set(c[i], c[j], u(rng));
  PayoffResources res;
  res.precomputed = &sim;
  const auto store = build_payoff_store(c, PayoffProvider::precomputed, res);
  const std::string path = ::testing::TempDir() + "/z.tsv";
  store.save(path);
  const auto loaded = PrecomputedSimilarity::load(path);
  res.precomputed = &loaded;
  EXPECT_EQ(build_payoff_store(c, PayoffProvider::precomputed, res).z(), store.z());
}

TEST(PartialPayoff, SlicesAndTransposes) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<std::string> c = {"a", "b", "c", "d", "e"};
  Matrix z(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) z(i, j) = z(j, i) = u(rng);
  const PayoffStore store(c, z, PayoffProvider::precomputed);

  EXPECT_EQ(partial_payoff(store, c, c), z);
  const auto block = partial_payoff(store, {"b", "d"}, {"a", "c", "e"});
  ASSERT_EQ(block.rows(), 2u);
  ASSERT_EQ(block.cols(), 3u);
  EXPECT_EQ(block(1, 2), z(3, 4));
  EXPECT_THROW(partial_payoff(store, {"zz"}, {"a"}), UnknownConcept);

  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> mi, mj;
    for (const auto& id : c) {
      if (rng() % 2) mi.push_back(id);
      if (rng() % 2) mj.push_back(id);
    }
    const auto a = partial_payoff(store, mi, mj);
    EXPECT_EQ(partial_payoff(store, mj, mi), a.transposed());
    EXPECT_EQ(partial_payoff(store, mi, mj), a);  // repeated calls identical
  }
}

}  // namespace
}  // namespace wsdgame
