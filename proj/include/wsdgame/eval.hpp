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

#ifndef WSDGAME_EVAL_HPP_
#define WSDGAME_EVAL_HPP_

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "wsdgame/dynamics.hpp"
#include "wsdgame/graph.hpp"
#include "wsdgame/senses.hpp"
#include "wsdgame/tsv.hpp"

namespace wsdgame {

// instance_id -> acceptable concepts.
class GoldStandard {
 public:
  // instance_id<TAB>concept_id[,concept_id...]
  static GoldStandard load(const std::string& path) {
    GoldStandard gold;
    tsv::Reader reader(path);
    std::string line;
    while (reader.next(line)) {
      auto f = reader.fields(line, 2);
      std::set<std::string> ids;
      for (const auto& id : tsv::split(f[1], ',')) {
        auto t = tsv::trim(id);
        if (!t.empty()) ids.emplace(t);
      }
      if (ids.empty()) reader.fail("empty gold set for '" + f[0] + "'");
      if (!gold.answers_.emplace(f[0], std::move(ids)).second) {
        reader.fail("duplicate instance '" + f[0] + "'");
      }
    }
    return gold;
  }

  void add(const std::string& instance, std::set<std::string> ids) {
    answers_[instance] = std::move(ids);
  }

  std::size_t size() const { return answers_.size(); }
  const std::set<std::string>* find(const std::string& instance) const {
    auto it = answers_.find(instance);
    return it == answers_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, std::set<std::string>> answers_;
};

// System answer for one scored instance.
struct LabeledAnswer {
  std::string instance_id;
  std::string pos;
  std::optional<std::string> concept_id;  // empty: unassigned
  double probability = 0.0;

  friend bool operator==(const LabeledAnswer&, const LabeledAnswer&) = default;
};

using AnswerSet = std::vector<LabeledAnswer>;

// Attaches instance ids to the outcome of a game over `players`.
inline AnswerSet label(const GameOutcome& outcome, const std::vector<Occurrence>& players) {
  AnswerSet out;
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (!players[i].scored()) continue;
    LabeledAnswer a{players[i].instance_id, players[i].pos, std::nullopt, 0.0};
    if (const auto& po = outcome.players[i]; po.assigned()) {
      a.concept_id = outcome.final_state.concepts[*po.column];
      a.probability = po.probability;
    }
    out.push_back(std::move(a));
  }
  return out;
}

// Top-ranked sense for every player; unassigned when the inventory is
// missing.
inline AnswerSet mfs_baseline(const std::vector<Occurrence>& players, const SenseInventory& inv) {
  AnswerSet out;
  for (const auto& p : players) {
    if (!p.scored()) continue;
    LabeledAnswer a{p.instance_id, p.pos, std::nullopt, 0.0};
    if (inv.covers(p)) {
      a.concept_id = inv.at(p).concepts.front();
      a.probability = 1.0;
    }
    out.push_back(std::move(a));
  }
  return out;
}

// instance_id<TAB>concept_id, unassigned instances omitted.
inline void save_answers(const AnswerSet& answers, std::ostream& os) {
  for (const auto& a : answers)
    if (a.concept_id) os << a.instance_id << '\t' << *a.concept_id << '\n';
}

inline void save_answers(const AnswerSet& answers, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot write " + path);
  save_answers(answers, os);
}

inline AnswerSet load_answers(const std::string& path) {
  tsv::Reader reader(path);
  AnswerSet out;
  std::set<std::string> seen;
  std::string line;
  while (reader.next(line)) {
    auto f = reader.fields(line, 2);
    if (!seen.insert(f[0]).second) reader.fail("duplicate instance '" + f[0] + "'");
    out.push_back(LabeledAnswer{f[0], "", std::string(tsv::trim(f[1])), 1.0});
  }
  return out;
}

// F1 in percent from precision and recall given as fractions.
inline double f1_score(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * (precision * recall) / (precision + recall) * 100.0;
}

struct Score {
  double precision = 0.0;  // percent
  double recall = 0.0;     // percent
  double f1 = 0.0;         // percent
  std::size_t answered = 0;
  std::size_t correct = 0;
  std::size_t total = 0;

  static Score from_counts(std::size_t correct, std::size_t answered, std::size_t total) {
    Score s;
    s.correct = correct;
    s.answered = answered;
    s.total = total;
    const double p = answered ? static_cast<double>(correct) / static_cast<double>(answered) : 0.0;
    const double r = total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
    s.precision = 100.0 * p;
    s.recall = 100.0 * r;
    s.f1 = f1_score(p, r);
    return s;
  }
};

struct ScoreReport {
  Score overall;
  std::map<std::string, Score> by_pos;
  bool precision_equals_recall = false;  // every instance was answered
};

// Precision = correct / answered, recall = correct / gold instances. An
// answer is correct when it is any member of the instance's gold set. Gold
// instances without an answer count against recall only; an answered
// instance missing from the gold standard is an error.
inline ScoreReport score(const AnswerSet& answers, const GoldStandard& gold) {
  std::size_t correct = 0, answered = 0;
  struct Tally {
    std::size_t correct = 0, answered = 0, total = 0;
  };
  std::map<std::string, Tally> pos;
  std::set<std::string> seen;
  for (const auto& a : answers) {
    const auto* ids = gold.find(a.instance_id);
    if (!ids) throw UnknownInstance("instance '" + a.instance_id + "' is not in the gold standard");
    if (!seen.insert(a.instance_id).second) {
      throw UnknownInstance("instance '" + a.instance_id + "' answered twice");
    }
    Tally* t = a.pos.empty() ? nullptr : &pos[a.pos];
    if (t) ++t->total;
    if (!a.concept_id) continue;
    ++answered;
    if (t) ++t->answered;
    if (ids->count(*a.concept_id)) {
      ++correct;
      if (t) ++t->correct;
    }
  }
  ScoreReport report;
  report.overall = Score::from_counts(correct, answered, gold.size());
  for (const auto& [p, t] : pos) report.by_pos[p] = Score::from_counts(t.correct, t.answered, t.total);
  report.precision_equals_recall = answered == gold.size();
  return report;
}

namespace detail {
inline std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}
}  // namespace detail

// scope<TAB>precision<TAB>recall<TAB>f1<TAB>correct<TAB>answered<TAB>total
inline void write_report_tsv(const ScoreReport& r, std::ostream& os) {
  os << "scope\tprecision\trecall\tf1\tcorrect\tanswered\ttotal\n";
  auto row = [&](const std::string& scope, const Score& s) {
    os << scope << '\t' << detail::fixed(s.precision, 4) << '\t' << detail::fixed(s.recall, 4)
       << '\t' << detail::fixed(s.f1, 4) << '\t' << s.correct << '\t' << s.answered << '\t'
       << s.total << '\n';
  };
  row("all", r.overall);
  for (const auto& [p, s] : r.by_pos) row(p, s);
}

inline void write_report_text(const ScoreReport& r, std::ostream& os) {
  const Score& s = r.overall;
  os << "precision  " << detail::fixed(s.precision) << "\n"
     << "recall     " << detail::fixed(s.recall) << "\n"
     << "F1         " << detail::fixed(s.f1) << "\n"
     << "answered   " << s.answered << " / " << s.total << " (correct " << s.correct << ")\n";
  if (r.precision_equals_recall) os << "all instances answered: precision = recall\n";
  for (const auto& [p, ps] : r.by_pos)
    os << "  " << p << ": P " << detail::fixed(ps.precision) << "  R " << detail::fixed(ps.recall)
       << "  F1 " << detail::fixed(ps.f1) << "  (" << ps.correct << "/" << ps.answered << "/"
       << ps.total << ")\n";
}

}  // namespace wsdgame

#endif  // WSDGAME_EVAL_HPP_
