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

#ifndef NEOGRAPHY_MODEL_CONFIG_HPP_
#define NEOGRAPHY_MODEL_CONFIG_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "neography/language_model.hpp"
#include "neography/message_record.hpp"
#include "neography/recognition.hpp"

// Language models described as JSON documents.
//
//   {"type": "none"}                                 no LM (null model)
//   {"type": "uniform", "alphabet": "abc"}
//   {"type": "regex", "regex": <regex node>}
//   {"type": "skeleton", "params": {...}}            params optional
//   {"type": "rebus", "params": {...}}               params optional
//   {"type": "lexicon", "path": "words.tsv"} or {"type": "lexicon", "words": ["a", ...]}
//   {"type": "skeleton-lexicon", "path": "freq.tsv", "top_k": 1200}
//   {"type": "homophone-lexicon", "path": "freq.tsv", "top_k": 1200, "rules": "rules.json"}
//   {"type": "ngram", "order": 3, "k": 0.5, "path": "freq.tsv" | "strings": [...],
//    "alphabet": "..."}
//   {"type": "optimal-lexicon"}                      exact labels of the corpus
//   {"type": "interpolate", "components": [{"weight": 0.5, "model": {...}}, ...]}
//
// Relative paths resolve against the directory of the document. A document
// without "type" is read as a bare regex node.
namespace neography::config {

struct ModelContext {
  std::filesystem::path base_dir = ".";
  // Needed by "optimal-lexicon" only.
  std::span<const MessageRecord> corpus;
};

// Throws Error(kParseError) on schema violations, plus whatever the
// underlying builders throw. Returns null for {"type": "none"}.
ScoredModel parse_model(std::string_view document, const ModelContext& context);
ScoredModel load_model(const std::filesystem::path& path,
                       std::span<const MessageRecord> corpus = {});

// {"n_best": 10, "configs": [{"name": "no-lm", "lambda": 0, "model": {...}}, ...]}
struct Experiment {
  std::size_t n_best = 10;
  std::vector<sim::EvalConfig> configs;
};

Experiment parse_experiment(std::string_view document, const ModelContext& context);
Experiment load_experiment(const std::filesystem::path& path,
                           std::span<const MessageRecord> corpus);

}  // namespace neography::config

#endif  // NEOGRAPHY_MODEL_CONFIG_HPP_
