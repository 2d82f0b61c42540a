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

#ifndef NEOGRAPHY_NGRAM_HPP_
#define NEOGRAPHY_NGRAM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neography/language_model.hpp"

namespace neography {

// Character n-gram model with add-k smoothing over alphabet ∪ {end}.
// Contexts are the previous order-1 characters, left-padded with a boundary
// symbol; every training string contributes one end event.
class NGramModel final : public LanguageModel {
 public:
  // Boundary symbol: left padding inside contexts and the end event when
  // predicted. Outside the Unicode range, so it never collides with text.
  static constexpr char32_t kBoundary = 0x110000;

  int order() const noexcept { return order_; }
  double smoothing() const noexcept { return k_; }
  const std::vector<char32_t>& alphabet() const noexcept { return alphabet_; }

  // Smoothed P(next | context). `context` keeps its last order-1 symbols and
  // is left-padded when shorter. Returns 0 for symbols outside alphabet ∪ {end}.
  double conditional(std::u32string_view context, char32_t next) const;

  // Sum over the chain, including the final end event.
  double log_probability(std::u32string_view s) const override;
  std::string kind() const override { return "ngram"; }

 private:
  friend NGramModel train_ngram(const std::vector<std::string>&, int, double,
                                std::optional<std::u32string>);
  NGramModel() = default;

  std::u32string context_key(std::u32string_view history) const;

  int order_ = 1;
  double k_ = 1.0;
  std::vector<char32_t> alphabet_;
  struct ContextCounts {
    std::map<char32_t, std::uint64_t> next;
    std::uint64_t total = 0;
  };
  std::map<std::u32string, ContextCounts> counts_;
};

// Throws Error(kEmptyCorpus) on an empty corpus, Error(kInvalidArgument) for
// order < 1, k <= 0, or corpus characters outside an explicit alphabet.
// Without an explicit alphabet, the corpus characters are used.
NGramModel train_ngram(const std::vector<std::string>& corpus, int order, double k,
                       std::optional<std::u32string> alphabet = std::nullopt);

}  // namespace neography

#endif  // NEOGRAPHY_NGRAM_HPP_
