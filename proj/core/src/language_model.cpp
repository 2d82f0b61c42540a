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

#include "neography/language_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "neography/error.hpp"
#include "neography/text.hpp"

namespace neography {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

class UniformModel final : public LanguageModel {
 public:
  explicit UniformModel(std::u32string_view alphabet)
      : alphabet_(alphabet.begin(), alphabet.end()) {
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
    if (alphabet_.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "uniform model needs a non-empty alphabet");
    }
    log_p_ = -std::log(static_cast<double>(alphabet_.size()));
  }

  double log_probability(std::u32string_view s) const override {
    for (char32_t c : s) {
      if (!std::binary_search(alphabet_.begin(), alphabet_.end(), c)) return kNegInf;
    }
    return log_p_ * static_cast<double>(s.size());
  }
  std::string kind() const override { return "uniform"; }

 private:
  std::vector<char32_t> alphabet_;
  double log_p_;
};

class AutomatonModel final : public LanguageModel {
 public:
  explicit AutomatonModel(WeightedAutomaton a) : automaton_(std::move(a)) {}
  double log_probability(std::u32string_view s) const override {
    return automaton_.log_probability(s);
  }
  std::string kind() const override { return "automaton"; }

 private:
  WeightedAutomaton automaton_;
};

class LexiconModel final : public LanguageModel {
 public:
  explicit LexiconModel(const Lexicon& lexicon) {
    if (lexicon.empty()) throw Error(ErrorCode::kEmptyLexicon, "lexicon model needs entries");
    double total = 0.0;
    for (const auto& [word, entry] : lexicon.entries()) {
      total += entry.frequency == 0 ? 1.0 : static_cast<double>(entry.frequency);
    }
    const double log_total = std::log(total);
    for (const auto& [word, entry] : lexicon.entries()) {
      const double w = entry.frequency == 0 ? 1.0 : static_cast<double>(entry.frequency);
      log_p_.emplace(text::decode_utf8(word), std::log(w) - log_total);
    }
  }

  double log_probability(std::u32string_view s) const override {
    const auto it = log_p_.find(std::u32string(s));
    return it == log_p_.end() ? kNegInf : it->second;
  }
  std::string kind() const override { return "lexicon"; }

 private:
  std::unordered_map<std::u32string, double> log_p_;
};

class InterpolatedModel final : public LanguageModel {
 public:
  explicit InterpolatedModel(std::vector<std::pair<ScoredModel, double>> parts)
      : parts_(std::move(parts)) {}

  double log_probability(std::u32string_view s) const override {
    std::vector<double> terms;
    terms.reserve(parts_.size());
    for (const auto& [model, weight] : parts_) {
      if (weight <= 0.0) continue;
      const double lp = model->log_probability(s);
      if (std::isfinite(lp)) terms.push_back(std::log(weight) + lp);
    }
    if (terms.empty()) return kNegInf;
    const double peak = *std::max_element(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - peak);
    return peak + std::log(sum);
  }
  std::string kind() const override { return "interpolated"; }

 private:
  std::vector<std::pair<ScoredModel, double>> parts_;
};

}  // namespace

Cost LanguageModel::score(std::u32string_view s) const {
  const double lp = log_probability(s);
  if (!std::isfinite(lp)) return std::nullopt;
  return lp >= 0.0 ? 0.0 : -lp;
}

Cost LanguageModel::score(std::string_view utf8) const {
  return score(std::u32string_view(text::to_nfc_u32(utf8)));
}

ScoredModel make_uniform_model(std::u32string_view alphabet) {
  return std::make_shared<UniformModel>(alphabet);
}

ScoredModel make_automaton_model(WeightedAutomaton automaton) {
  return std::make_shared<AutomatonModel>(std::move(automaton));
}

ScoredModel make_lexicon_model(const Lexicon& lexicon) {
  return std::make_shared<LexiconModel>(lexicon);
}

ScoredModel interpolate(const std::vector<std::pair<ScoredModel, double>>& models) {
  if (models.empty()) throw Error(ErrorCode::kBadWeights, "no models to interpolate");
  double sum = 0.0;
  for (const auto& [model, weight] : models) {
    if (!model) throw Error(ErrorCode::kInvalidArgument, "null model in mixture");
    if (weight < 0.0) throw Error(ErrorCode::kBadWeights, "negative mixture weight");
    sum += weight;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kBadWeights, "mixture weights sum to " + std::to_string(sum));
  }
  return std::make_shared<InterpolatedModel>(models);
}

}  // namespace neography
