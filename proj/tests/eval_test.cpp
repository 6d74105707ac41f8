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

#include "wsdgame/eval.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

namespace wsdgame {
namespace {

LabeledAnswer answer(const std::string& id, std::optional<std::string> c, const std::string& pos = "n") {
  return {id, pos, std::move(c), 1.0};
}

GoldStandard gold_of(std::size_t n) {
  GoldStandard g;
  for (std::size_t k = 0; k < n; ++k) g.add("i" + std::to_string(k), {"ok" + std::to_string(k)});
  return g;
}

TEST(F1, Arithmetic) {
  EXPECT_DOUBLE_EQ(f1_score(0.5, 0.5), 50.0);
  EXPECT_NEAR(f1_score(0.5, 0.4), 44.444444444444, 1e-9);
  EXPECT_EQ(f1_score(0.0, 0.0), 0.0);
}

TEST(Score, AllCorrect) {
  const auto gold = gold_of(3);
  AnswerSet a;
  for (int k = 0; k < 3; ++k) a.push_back(answer("i" + std::to_string(k), "ok" + std::to_string(k)));
  const auto r = score(a, gold);
  EXPECT_EQ(r.overall.precision, 100.0);
  EXPECT_EQ(r.overall.recall, 100.0);
  EXPECT_EQ(r.overall.f1, 100.0);
  EXPECT_TRUE(r.precision_equals_recall);
}

TEST(Score, PartialAnswers) {
  // 2 correct of 4 answered of 5 total
  const auto gold = gold_of(5);
  AnswerSet a = {answer("i0", "ok0"), answer("i1", "ok1"), answer("i2", "bad"),
                 answer("i3", "bad", "v"), answer("i4", std::nullopt, "v")};
  const auto r = score(a, gold);
  EXPECT_DOUBLE_EQ(r.overall.precision, 50.0);
  EXPECT_DOUBLE_EQ(r.overall.recall, 40.0);
  EXPECT_NEAR(r.overall.f1, 44.4444, 1e-4);
  EXPECT_FALSE(r.precision_equals_recall);
  EXPECT_EQ(r.by_pos.at("n").correct, 2u);
  EXPECT_EQ(r.by_pos.at("v").answered, 1u);
  EXPECT_EQ(r.by_pos.at("v").total, 2u);
}

TEST(Score, HalfRightEverywhere) {
  const auto gold = gold_of(4);
  AnswerSet a = {answer("i0", "ok0"), answer("i1", "ok1"), answer("i2", "x"), answer("i3", "y")};
  EXPECT_DOUBLE_EQ(score(a, gold).overall.f1, 50.0);
}

TEST(Score, AnyGoldMemberCounts) {
  GoldStandard gold;
  gold.add("i0", {"a", "b"});
  EXPECT_EQ(score({answer("i0", "b")}, gold).overall.correct, 1u);
}

TEST(Score, UnknownInstanceIsAnError) {
  EXPECT_THROW(score({answer("nope", "x")}, gold_of(2)), UnknownInstance);
}

TEST(ScoreProperty, BoundsAndHarmonicMean) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const auto gold = gold_of(n);
    AnswerSet a;
    for (std::size_t k = 0; k < n; ++k) {
      switch (rng() % 3) {
        case 0: a.push_back(answer("i" + std::to_string(k), "ok" + std::to_string(k))); break;
        case 1: a.push_back(answer("i" + std::to_string(k), "wrong")); break;
        default: a.push_back(answer("i" + std::to_string(k), std::nullopt));
      }
    }
    const auto s = score(a, gold).overall;
    for (double v : {s.precision, s.recall, s.f1}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 100.0);
    }
    EXPECT_GE(s.f1, std::min(s.precision, s.recall) - 1e-9);
    EXPECT_LE(s.f1, std::max(s.precision, s.recall) + 1e-9);
  }
}

TEST(MfsBaseline, TopRankedSense) {
  SenseInventory inv;
  inv.add("bank", "n", {"a", "b", "c"});
  inv.add("river", "n", {"r"});
  std::vector<Occurrence> players = {{"d", 0, "bank", "n", "i0"},
                                     {"d", 1, "river", "n", "i1"},
                                     {"d", 2, "ghost", "n", "i2"},
                                     {"d", 3, "bank", "n", "-"}};
  const auto a = mfs_baseline(players, inv);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0].concept_id, "a");
  EXPECT_EQ(a[1].concept_id, "r");
  EXPECT_FALSE(a[2].concept_id);

  GoldStandard gold;
  gold.add("i0", {"a"});
  gold.add("i1", {"r"});
  const auto r = score(mfs_baseline({players[0], players[1]}, inv), gold);
  EXPECT_EQ(r.overall.f1, 100.0);
  EXPECT_EQ(score(mfs_baseline({players[0], players[1]}, inv), gold).overall.f1, r.overall.f1);
}

TEST(Files, AnswersAndGoldRoundTrip) {
  const std::string dir = ::testing::TempDir();
  AnswerSet a = {answer("i0", "ok0"), answer("i1", std::nullopt), answer("i2", "bad")};
  save_answers(a, dir + "/answers.tsv");
  const auto loaded = load_answers(dir + "/answers.tsv");
  ASSERT_EQ(loaded.size(), 2u);
  EXPECT_EQ(loaded[1].concept_id, "bad");

  std::ofstream(dir + "/gold.tsv") << "i0\tok0\ni1\tok1,alt1\ni2\tok2\n";
  const auto gold = GoldStandard::load(dir + "/gold.tsv");
  EXPECT_EQ(gold.size(), 3u);
  EXPECT_EQ(gold.find("i1")->size(), 2u);
  const auto r = score(loaded, gold);
  EXPECT_EQ(r.overall.answered, 2u);
  EXPECT_EQ(r.overall.correct, 1u);

  std::ostringstream tsv;
  write_report_tsv(r, tsv);
  EXPECT_EQ(tsv.str().substr(0, 6), "scope\t");
  EXPECT_NE(tsv.str().find("all\t50.0000\t33.3333\t40.0000\t1\t2\t3"), std::string::npos);

  std::ofstream(dir + "/gold.tsv") << "i0\t\n";
  EXPECT_THROW(GoldStandard::load(dir + "/gold.tsv"), ParseError);
}

}  // namespace
}  // namespace wsdgame
