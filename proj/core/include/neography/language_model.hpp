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

#ifndef NEOGRAPHY_LANGUAGE_MODEL_HPP_
#define NEOGRAPHY_LANGUAGE_MODEL_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neography/lexicon.hpp"
#include "neography/weighted_automaton.hpp"

namespace neography {

// A cost is -ln P(s); nullopt stands for REJECT (P(s) = 0).
using Cost = std::optional<double>;

class LanguageModel {
 public:
  virtual ~LanguageModel() = default;

  // ln P(s), or -infinity for a rejected string.
  virtual double log_probability(std::u32string_view s) const = 0;
  virtual std::string kind() const = 0;

  Cost score(std::u32string_view s) const;
  // NFC-normalizes before scoring.
  Cost score(std::string_view utf8) const;
};

using ScoredModel = std::shared_ptr<const LanguageModel>;

// Independent uniform choice among `alphabet` at every position; no
// end-of-string event.
ScoredModel make_uniform_model(std::u32string_view alphabet);

ScoredModel make_automaton_model(WeightedAutomaton automaton);

// P(w) = weight(w) / total weight, with weight = frequency, or 1 for
// entries whose frequency is 0. Strings outside the lexicon are rejected.
// Throws Error(kEmptyLexicon).
ScoredModel make_lexicon_model(const Lexicon& lexicon);

// Mixture P(s) = sum_i weight_i * P_i(s). Throws Error(kBadWeights) when a
// weight is negative or the weights do not sum to 1 within 1e-9.
ScoredModel interpolate(const std::vector<std::pair<ScoredModel, double>>& models);

}  // namespace neography

#endif  // NEOGRAPHY_LANGUAGE_MODEL_HPP_
