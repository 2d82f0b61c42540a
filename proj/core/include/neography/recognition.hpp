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

#ifndef NEOGRAPHY_RECOGNITION_HPP_
#define NEOGRAPHY_RECOGNITION_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neography/language_model.hpp"
#include "neography/message_record.hpp"
#include "neography/rr_metric.hpp"

// A stand-in for a black-box handwriting recognizer: a noisy channel turns
// each label into an n-best candidate list, and a decoder re-ranks the
// candidates with a language model.
namespace neography::sim {

struct CharConfusion {
  // Overrides ConfusionModel::p_correct for this character.
  std::optional<double> p_correct;
  // Characters this one is misread as; empty means "the whole alphabet".
  std::u32string alternatives;
};

struct ConfusionModel {
  double p_correct = 0.9;
  double p_delete = 0.02;
  double p_insert = 0.02;
  // Fallback confusion set for characters without listed alternatives.
  std::u32string alphabet = default_alphabet();
  std::map<char32_t, CharConfusion> confusions = visually_similar();
  // Characters an insertion can produce.
  std::u32string insertions = U".";
  // Perturbs the order of equally probable alternatives, nothing else.
  std::uint64_t seed = 0;

  static std::u32string default_alphabet();
  // Small table of single-character look-alikes (a/o, l/1, u/v, ...).
  static std::map<char32_t, CharConfusion> visually_similar();

  // Throws Error(kInvalidArgument).
  void validate() const;
  // Substitution distribution for `c`, the correct reading first. Sums to 1.
  std::vector<std::pair<char32_t, double>> substitutions(char32_t c) const;

  // {"p_correct": .9, "p_delete": .02, "p_insert": .02, "alphabet": "...",
  //  "insertions": ".", "seed": 7, "use_default_confusions": true,
  //  "confusions": {"a": {"p_correct": 0.5, "alternatives": "o"}, ...}}
  static ConfusionModel from_json(std::string_view document);
  static ConfusionModel load(const std::filesystem::path& path);
};

struct Candidate {
  std::string text;
  // -ln of the probability of the best channel path producing `text`.
  double cost = 0.0;
};

struct CandidateList {
  // Distinct strings, ascending cost.
  std::vector<Candidate> items;
  std::string source_id;
};

// Exact k-best extraction over the per-position lattice of channel
// alternatives (each label position: deletion, substitution, or
// substitution followed by one insertion). Deterministic given
// (model.seed, label). Throws Error(kEmptyLabel) or Error(kInvalidArgument)
// for n_best == 0.
CandidateList corrupt(std::string_view label, const ConfusionModel& model, std::size_t n_best);

struct DecodeResult {
  std::string text;
  std::size_t rank = 0;  // position in the candidate list
  // No candidate had a finite LM cost; the channel-best was returned.
  bool all_rejected = false;
};

// argmin over candidates of (1 - lambda) * channel + lambda * lm, with
// REJECT = +infinity and ties going to the earlier candidate. A null `lm`
// or lambda = 0 returns the channel-best candidate.
DecodeResult decode(const CandidateList& candidates, const LanguageModel* lm, double lambda);

struct EvalConfig {
  std::string name;
  ScoredModel lm;  // may be null: channel only
  double lambda = 0.5;
};

struct EvalRow {
  std::string config;
  Category category = Category::kOther;
  std::size_t n_messages = 0;
  std::int64_t n_chars = 0;
  std::int64_t distance = 0;

  rr::Rational rr() const { return rr::RRResult{distance, n_chars}.rr(); }
};

struct EvalReport {
  std::vector<EvalRow> rows;

  const EvalRow* find(std::string_view config, Category category) const;
  // config,category,n_messages,n_chars,rr_percent
  std::string to_csv() const;
  // Categories down, configurations across.
  std::string to_table() const;
};

// Corrupts each label once, decodes it under every configuration, and
// scores it against the label. One row per configuration and per category
// present in the corpus. Throws Error(kEmptyCorpus) / Error(kInvalidArgument)
// on empty inputs.
EvalReport evaluate(std::span<const MessageRecord> corpus, const ConfusionModel& channel,
                    std::span<const EvalConfig> configs, std::size_t n_best = 10);

// Unweighted lexicon of the exact label strings: the recognition upper bound.
ScoredModel make_optimal_lexicon_model(std::span<const MessageRecord> corpus);

}  // namespace neography::sim

#endif  // NEOGRAPHY_RECOGNITION_HPP_
