// Copyright 2026 The Neography Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "neography/corpus.hpp"
#include "neography/error.hpp"
#include "neography/lexicon.hpp"
#include "neography/model_config.hpp"
#include "neography/phonetic.hpp"
#include "neography/rebus.hpp"
#include "neography/recognition.hpp"
#include "neography/rr_metric.hpp"
#include "neography/skeleton.hpp"

namespace neography::cli {
namespace {

struct GenLexiconArgs {
  std::string mode;
  std::string input;
  std::size_t top_k = 0;
  std::string rules;
  std::string output;
};

struct ScoreArgs {
  std::string model;
  std::string text;
};

struct RrArgs {
  std::string label;
  std::string candidate;
  std::string pairs;
  bool macro = false;
  bool fold_case = false;
};

struct SimulateArgs {
  std::string corpus;
  std::string channel;
  std::string config;
  std::string out_csv;
};

struct SynthArgs {
  std::string lexicon;
  std::string rules;
  std::string rebus_table;
  std::string counts;
  std::uint64_t seed = 0;
  std::string out;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  auto out = open_output(path);
  out << content;
  if (!out) throw Error(ErrorCode::kIo, "error writing " + path);
}

int gen_lexicon(const GenLexiconArgs& a, std::ostream& err) {
  const Lexicon freq = load_frequency_list(a.input);
  const std::size_t top_k = a.top_k == 0 ? freq.size() : a.top_k;
  Lexicon result;
  if (a.mode == "skeleton") {
    if (freq.size() < top_k) {
      throw Error(ErrorCode::kInsufficientLexicon, "lexicon has fewer than top-k words");
    }
    Lexicon top;
    for (const auto& w : freq.top_k(top_k)) top.add(w, freq.frequency(w));
    result = skeleton::build_skeleton_lexicon(top);
  } else {
    const auto rules = a.rules.empty() ? phonetic::RuleSet::defaults()
                                       : phonetic::RuleSet::load(a.rules);
    auto homophones = phonetic::build_homophone_lexicon(freq, top_k, rules);
    for (const auto& w : homophones.truncated) {
      err << "warning: closure limit reached for '" << w << "'\n";
    }
    result = std::move(homophones.lexicon);
  }
  auto out = open_output(a.output);
  write_frequency_list(out, result);
  return kExitOk;
}

int score(const ScoreArgs& a, std::ostream& out) {
  const ScoredModel model = config::load_model(a.model);
  if (!model) throw Error(ErrorCode::kInvalidArgument, "model file describes no model");
  const Cost cost = model->score(a.text);
  if (!cost) {
    out << "REJECT\n";
  } else {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", *cost);
    out << buffer << '\n';
  }
  return kExitOk;
}

std::vector<std::pair<std::string, std::string>> read_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw Error(ErrorCode::kParseError, "expected label<TAB>candidate", line_no);
    }
    const std::string label = line.substr(0, tab);
    if (label.empty()) throw Error(ErrorCode::kEmptyLabel, "empty label", line_no);
    pairs.emplace_back(label, line.substr(tab + 1));
  }
  return pairs;
}

int rr_command(const RrArgs& a, std::ostream& out) {
  rr::Options options;
  options.fold_case = a.fold_case;
  if (a.pairs.empty()) {
    out << rr::recognition_rate(a.label, a.candidate, options).rr().format(2) << '\n';
    return kExitOk;
  }
  const auto pairs = read_pairs(a.pairs);
  for (const auto& [label, candidate] : pairs) {
    out << label << '\t' << candidate << '\t'
        << rr::recognition_rate(label, candidate, options).rr().format(2) << '\n';
  }
  if (a.macro) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.2f", rr::corpus_rr_macro(pairs, options));
    out << "macro\t" << buffer << '\n';
  } else {
    out << "overall\t" << rr::corpus_rr(pairs, options).rr().format(2) << '\n';
  }
  return kExitOk;
}

int simulate(const SimulateArgs& a, std::ostream& out) {
  const auto corpus = corpus::load_corpus(a.corpus);
  const auto channel = sim::ConfusionModel::load(a.channel);
  const auto experiment = config::load_experiment(a.config, corpus);
  const auto report = sim::evaluate(corpus, channel, experiment.configs, experiment.n_best);
  write_text_file(a.out_csv, report.to_csv());
  out << report.to_table();
  return kExitOk;
}

int synth(const SynthArgs& a) {
  const Lexicon lexicon = load_frequency_list(a.lexicon);
  const auto rules = phonetic::RuleSet::load(a.rules);
  const auto table = rebus::RebusTable::load(a.rebus_table);
  const auto counts = corpus::SynthCounts::parse(a.counts);
  const auto records = corpus::synth_corpus(lexicon, rules, table, counts, a.seed);
  corpus::save_corpus(a.out, records);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Language models for handwritten short messages", "neography"};
  app.require_subcommand(1);

  GenLexiconArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-lexicon", "Build a skeleton or homophone lexicon");
  gen_cmd->add_option("--mode", gen.mode, "skeleton or phonetic")
      ->required()
      ->check(CLI::IsMember({"skeleton", "phonetic"}));
  gen_cmd->add_option("--input", gen.input, "Frequency list (word<TAB>count)")->required();
  gen_cmd->add_option("--top-k", gen.top_k, "Most frequent words to expand (0 = all)");
  gen_cmd->add_option("--rules", gen.rules, "Rewrite rule set (phonetic mode)");
  gen_cmd->add_option("--output", gen.output, "Output frequency list")->required();

  ScoreArgs sc;
  auto* score_cmd = app.add_subcommand("score", "Print the LM cost of a string, or REJECT");
  score_cmd->add_option("--model", sc.model, "Model document (JSON)")->required();
  score_cmd->add_option("--text", sc.text, "String to score")->required();

  RrArgs rra;
  auto* rr_cmd = app.add_subcommand("rr", "Recognition rate of a candidate against its label");
  auto* label_opt = rr_cmd->add_option("--label", rra.label, "Ground-truth label");
  auto* cand_opt = rr_cmd->add_option("--candidate", rra.candidate, "Recognized string");
  auto* pairs_opt = rr_cmd->add_option("--pairs", rra.pairs, "File of label<TAB>candidate lines");
  rr_cmd->add_flag("--macro", rra.macro, "Average per-pair RR instead of per character");
  rr_cmd->add_flag("--fold-case", rra.fold_case, "Compare case-insensitively");
  label_opt->needs(cand_opt);
  cand_opt->needs(label_opt);
  pairs_opt->excludes(label_opt)->excludes(cand_opt);

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "Run the recognition simulator");
  sim_cmd->add_option("--corpus", sim_args.corpus, "Corpus (JSON Lines)")->required();
  sim_cmd->add_option("--channel", sim_args.channel, "Confusion model (JSON)")->required();
  sim_cmd->add_option("--config", sim_args.config, "Experiment configurations (JSON)")->required();
  sim_cmd->add_option("--out-csv", sim_args.out_csv, "CSV report")->required();

  SynthArgs syn;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus");
  synth_cmd->add_option("--lexicon", syn.lexicon, "Standard frequency list")->required();
  synth_cmd->add_option("--rules", syn.rules, "Rewrite rule set (JSON)")->required();
  synth_cmd->add_option("--rebus-table", syn.rebus_table, "Rebus table (TSV)")->required();
  synth_cmd->add_option("--counts", syn.counts, "skeleton,rebus,phonetic,other")->required();
  synth_cmd->add_option("--seed", syn.seed, "Random seed")->required();
  synth_cmd->add_option("--out", syn.out, "Output corpus (JSON Lines)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (*rr_cmd && rra.pairs.empty() && label_opt->count() == 0) {
      throw CLI::RequiredError("--label/--candidate or --pairs");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return gen_lexicon(gen, err);
    if (*score_cmd) return score(sc, out);
    if (*rr_cmd) return rr_command(rra, out);
    if (*sim_cmd) return simulate(sim_args, out);
    if (*synth_cmd) return synth(syn);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace neography::cli
