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

// Command-line front end: assoc, build-graph, disambiguate, score, demo-pd.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsdgame/wsdgame.hpp"

namespace {

using namespace wsdgame;

const std::map<std::string, AssociationMeasure> kMeasures = {
    {"dice", AssociationMeasure::dice},       {"mdice", AssociationMeasure::mdice},
    {"pmi", AssociationMeasure::pmi},         {"t_score", AssociationMeasure::t_score},
    {"t-score", AssociationMeasure::t_score}, {"z_score", AssociationMeasure::z_score},
    {"z-score", AssociationMeasure::z_score}, {"odds_r", AssociationMeasure::odds_r},
    {"odds-r", AssociationMeasure::odds_r},   {"chi_s", AssociationMeasure::chi_s},
    {"chi-s", AssociationMeasure::chi_s},     {"chi_s_c", AssociationMeasure::chi_s_c},
    {"chi-s-c", AssociationMeasure::chi_s_c}};

const std::map<std::string, PayoffProvider> kProviders = {
    {"wup", PayoffProvider::wup},
    {"jcn", PayoffProvider::jcn},
    {"tfidf", PayoffProvider::gloss_cosine_tfidf},
    {"vec", PayoffProvider::gloss_cosine_raw},
    {"precomputed", PayoffProvider::precomputed}};

const std::map<std::string, InitKind> kInits = {
    {"uniform", InitKind::uniform},
    {"geometric", InitKind::geometric},
    {"clustered", InitKind::clustered}};

const std::map<std::string, Fallback> kFallbacks = {
    {"none", Fallback::none}, {"first-sense", Fallback::first_sense}};

// Enum-valued options are collected as names and resolved after parsing.
struct EnumNames {
  std::string measure = "mdice";
  std::string provider = "tfidf";
  std::string init = "uniform";
  std::string fallback = "none";

  void apply(PipelineConfig& cfg) const {
    cfg.measure = kMeasures.at(measure);
    cfg.provider = kProviders.at(provider);
    cfg.init = kInits.at(init);
    cfg.dynamics.fallback = kFallbacks.at(fallback);
  }
};

template <class Map>
CLI::IsMember names_of(const Map& m) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : m) keys.push_back(k);
  return CLI::IsMember(keys);
}

void add_graph_options(CLI::App* sub, PipelineConfig& cfg, EnumNames& names) {
  sub->add_option("--occurrences", cfg.occurrences, "doc_id/position/lemma/pos/instance_id file");
  sub->add_option("--inventory", cfg.inventory, "sense inventory file");
  sub->add_option("--clusters", cfg.clusters, "ranked sense clusters file");
  sub->add_option("--counts", cfg.counts, "pair co-occurrence counts file");
  sub->add_option("--unigrams", cfg.unigrams, "unigram frequencies file with #N header");
  sub->add_option("--stopwords", cfg.stopwords, "stop-word list");
  sub->add_option("--measure", names.measure, "association measure weighting the graph")
      ->check(names_of(kMeasures));
  sub->add_option("--ngram", cfg.ngram, "proximity window in content tokens (0 disables)");
}

void add_game_options(CLI::App* sub, PipelineConfig& cfg, EnumNames& names) {
  sub->add_option("--graph", cfg.graph, "precomputed graph from build-graph");
  sub->add_option("--glosses", cfg.glosses, "concept gloss file");
  sub->add_option("--relations", cfg.relations, "concept relation file (super-glosses)");
  sub->add_option("--taxonomy", cfg.taxonomy, "taxonomy file for wup/jcn");
  sub->add_option("--similarity", cfg.similarity, "precomputed sense-similarity file");
  sub->add_option("--provider", names.provider, "sense-similarity provider")
      ->check(names_of(kProviders));
  sub->add_flag("--jcn-invert", cfg.jcn_invert, "use 1/(jcn + 1e-9) as similarity");
  sub->add_option("--init", names.init, "strategy initialization")
      ->check(names_of(kInits));
  sub->add_option("--p", cfg.p, "geometric distribution parameter");
  sub->add_option("--max-iterations", cfg.dynamics.max_iterations, "replicator iteration cap");
  sub->add_option("--epsilon", cfg.dynamics.epsilon, "convergence threshold (max entry change)");
  sub->add_option("--workers", cfg.dynamics.workers, "threads used per iteration");
  sub->add_option("--fallback", names.fallback, "answer for players that cannot move")
      ->check(names_of(kFallbacks));
  sub->add_option("--gold", cfg.gold, "gold standard file");
  sub->add_option("--answers", cfg.answers_out, "write instance_id/concept_id answers here");
  sub->add_option("--report", cfg.report_out, "write the tab-separated score report here");
  sub->add_option("--trajectory", cfg.trajectory_out, "write the strategy trajectory here");
}

// Splices the entries of a --config file in front of the subcommand's own
// arguments so that command-line flags override them.
std::vector<std::string> expand_config(CLI::App& app, std::vector<std::string> args) {
  std::string path;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--config" && it + 1 != args.end()) {
      path = *(it + 1);
      it = args.erase(it, it + 2);
    } else if (it->rfind("--config=", 0) == 0) {
      path = it->substr(9);
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (path.empty()) return args;

  std::size_t at = args.size();
  CLI::App* sub = nullptr;
  for (std::size_t k = 0; k < args.size(); ++k) {
    for (CLI::App* s : app.get_subcommands({})) {
      if (s->get_name() == args[k]) {
        sub = s;
        at = k + 1;
        break;
      }
    }
    if (sub) break;
  }
  if (!sub) throw ConfigError("--config needs a subcommand");

  std::vector<std::string> injected;
  for (const auto& e : read_config_file(path)) {
    if (!sub->get_option_no_throw("--" + e.key)) {
      // Keys owned by a sibling subcommand are skipped.
      bool known = false;
      for (CLI::App* s : app.get_subcommands({}))
        known = known || s->get_option_no_throw("--" + e.key) != nullptr;
      if (!known) throw ParseError(path, e.line, "unknown key '" + e.key + "'");
      continue;
    }
    injected.push_back("--" + e.key + "=" + e.value);
  }
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), injected.begin(), injected.end());
  return args;
}

int cmd_assoc(const std::string& counts_path, const std::string& unigrams_path,
              const std::vector<AssociationMeasure>& measures, const std::vector<Count>& table) {
  auto print = [](const std::string& a, const std::string& b, const ContingencyTable& t,
                  AssociationMeasure m) {
    std::cout << a << '\t' << b << '\t' << to_string(m) << '\t';
    try {
      std::cout << tsv::format_double(score(t, m)) << '\n';
    } catch (const UndefinedForTable&) {
      std::cout << "undefined\n";
    }
  };
  if (!table.empty()) {
    const auto t = table_from_counts(table[0], table[1], table[2], table[3]);
    for (auto m : measures) print("-", "-", t, m);
    return 0;
  }
  if (counts_path.empty() || unigrams_path.empty()) {
    throw ConfigError("assoc needs --counts and --unigrams, or --table");
  }
  const auto store = CooccurrenceStore::load(counts_path, unigrams_path);
  for (const auto& [key, o11] : store.pairs()) {
    auto t = store.table(key.first, key.second);
    for (auto m : measures) {
      if (!t) {
        std::cout << key.first << '\t' << key.second << '\t' << to_string(m) << "\tmissing\n";
        continue;
      }
      print(key.first, key.second, *t, m);
    }
  }
  return 0;
}

int cmd_demo_pd(const GameConfig& base, const std::string& trajectory) {
  auto pd = make_prisoners_dilemma();
  GameConfig cfg = base;
  cfg.record_trajectory = true;
  const GameOutcome out = run(pd.start, pd.weights, pd.game, cfg);
  std::cout << "# repeated prisoner's dilemma, discrete replicator update\n"
            << "# payoffs are all negative, so x_h * u_h / u(x,x) grows the strategy with the\n"
            << "# lower payoff; the continuous-time flow would move the other way\n"
            << "iteration\tconfess\tcooperate\n";
  for (std::size_t t = 0; t < out.trajectory.size(); ++t)
    std::cout << t << '\t' << tsv::format_double(out.trajectory[t](0, 0)) << '\t'
              << tsv::format_double(out.trajectory[t](0, 1)) << '\n';
  std::cout << "# " << (out.converged ? "converged" : "stopped") << " after " << out.iterations
            << " iterations\n";
  if (!trajectory.empty()) write_trajectory(out, trajectory);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word sense disambiguation as an evolutionary game solved by replicator dynamics",
               "wsdgame"};
  app.set_version_flag("--version", WSDGAME_VERSION);
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_path;
  app.add_option("--config", config_path,
                 "flat key = value file; keys are the subcommand's long options");

  // assoc
  std::string a_counts, a_unigrams;
  std::vector<std::string> a_measure_names;
  std::vector<Count> a_table;
  auto* assoc = app.add_subcommand("assoc", "score word pairs with association measures");
  assoc->add_option("--counts", a_counts, "pair co-occurrence counts file");
  assoc->add_option("--unigrams", a_unigrams, "unigram frequencies file with #N header");
  assoc->add_option("--measure", a_measure_names, "measures to compute (default: all)")
      ->check(names_of(kMeasures))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  assoc->add_option("--table", a_table, "score a single table given as o11 r1 c1 n")
      ->expected(4);

  // build-graph
  PipelineConfig g_cfg;
  EnumNames g_names;
  std::string g_out;
  auto* build = app.add_subcommand("build-graph", "build the player graph and emit it");
  add_graph_options(build, g_cfg, g_names);
  build->add_option("--out", g_out, "output path (default: stdout)");

  // disambiguate
  PipelineConfig d_cfg;
  EnumNames d_names;
  bool d_quiet = false;
  auto* dis = app.add_subcommand("disambiguate", "run the full disambiguation pipeline");
  add_graph_options(dis, d_cfg, d_names);
  add_game_options(dis, d_cfg, d_names);
  dis->add_flag("--quiet", d_quiet, "do not print the report");

  // score
  std::string s_answers, s_gold, s_report;
  auto* sc = app.add_subcommand("score", "score an answers file against a gold standard");
  sc->add_option("--answers", s_answers, "instance_id/concept_id answers")->required();
  sc->add_option("--gold", s_gold, "gold standard")->required();
  sc->add_option("--report", s_report, "write the tab-separated report here");

  // demo-pd
  GameConfig pd_cfg;
  pd_cfg.max_iterations = 200;
  std::string pd_traj;
  auto* pd = app.add_subcommand("demo-pd", "repeated prisoner's dilemma under replicator dynamics");
  pd->add_option("--max-iterations", pd_cfg.max_iterations, "iteration cap");
  pd->add_option("--epsilon", pd_cfg.epsilon, "convergence threshold");
  pd->add_option("--trajectory", pd_traj, "write the trajectory here");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const wsdgame::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (assoc->parsed()) {
      std::vector<AssociationMeasure> measures;
      for (const auto& name : a_measure_names) measures.push_back(kMeasures.at(name));
      if (measures.empty()) measures.assign(kAllMeasures.begin(), kAllMeasures.end());
      return cmd_assoc(a_counts, a_unigrams, measures, a_table);
    }
    if (build->parsed()) {
      g_names.apply(g_cfg);
      validate(g_cfg, false);
      const GraphBuild b = build_graph(g_cfg);
      if (g_out.empty()) {
        save_graph(b.graph, std::cout);
      } else {
        save_graph(b.graph, g_out);
      }
      std::cerr << b.players.size() << " players, " << b.stats.scored << " scored pairs, "
                << b.stats.missing << " missing, " << b.stats.undefined << " undefined\n";
      return 0;
    }
    if (dis->parsed()) {
      d_names.apply(d_cfg);
      const PipelineResult r = run_pipeline(d_cfg);
      write_outputs(d_cfg, r);
      if (!d_quiet) {
        std::cerr << r.build.players.size() << " players, " << r.payoffs.concepts().size()
                  << " concepts, " << r.outcome.iterations << " iterations"
                  << (r.outcome.converged ? " (converged)" : " (not converged)") << '\n';
        if (r.report) write_report_text(*r.report, std::cout);
        if (d_cfg.answers_out.empty()) save_answers(r.answers, std::cout);
      }
      return 0;
    }
    if (sc->parsed()) {
      const ScoreReport report = score(load_answers(s_answers), GoldStandard::load(s_gold));
      write_report_text(report, std::cout);
      if (!s_report.empty()) {
        std::ofstream os(s_report);
        if (!os) throw IoError("cannot write " + s_report);
        write_report_tsv(report, os);
      }
      return 0;
    }
    if (pd->parsed()) return cmd_demo_pd(pd_cfg, pd_traj);
  } catch (const wsdgame::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
