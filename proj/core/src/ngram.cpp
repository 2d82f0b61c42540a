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

#include "neography/ngram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "neography/error.hpp"
#include "neography/text.hpp"

namespace neography {

std::u32string NGramModel::context_key(std::u32string_view history) const {
  const std::size_t width = static_cast<std::size_t>(order_ - 1);
  if (history.size() > width) history = history.substr(history.size() - width);
  std::u32string key(width - history.size(), kBoundary);
  key.append(history);
  return key;
}

double NGramModel::conditional(std::u32string_view context, char32_t next) const {
  if (next != kBoundary && !std::binary_search(alphabet_.begin(), alphabet_.end(), next)) {
    return 0.0;
  }
  const double vocabulary = static_cast<double>(alphabet_.size() + 1);
  const auto it = counts_.find(context_key(context));
  if (it == counts_.end()) return 1.0 / vocabulary;
  const auto hit = it->second.next.find(next);
  const double count = hit == it->second.next.end() ? 0.0 : static_cast<double>(hit->second);
  return (count + k_) / (static_cast<double>(it->second.total) + k_ * vocabulary);
}

double NGramModel::log_probability(std::u32string_view s) const {
  double lp = 0.0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    const char32_t next = i < s.size() ? s[i] : kBoundary;
    const double p = conditional(s.substr(0, i), next);
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    lp += std::log(p);
  }
  return lp;
}

NGramModel train_ngram(const std::vector<std::string>& corpus, int order, double k,
                       std::optional<std::u32string> alphabet) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "n-gram training corpus is empty");
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "n-gram order must be >= 1");
  if (!(k > 0.0)) throw Error(ErrorCode::kInvalidArgument, "smoothing constant must be > 0");

  NGramModel model;
  model.order_ = order;
  model.k_ = k;

  std::vector<std::u32string> strings;
  strings.reserve(corpus.size());
  for (const auto& s : corpus) strings.push_back(text::to_nfc_u32(s));

  std::set<char32_t> symbols;
  if (alphabet) {
    symbols.insert(alphabet->begin(), alphabet->end());
    for (const auto& s : strings) {
      for (char32_t c : s) {
        if (!symbols.count(c)) {
          throw Error(ErrorCode::kInvalidArgument,
                      "corpus character '" + text::encode_utf8(c) + "' outside the alphabet");
        }
      }
    }
  } else {
    for (const auto& s : strings) symbols.insert(s.begin(), s.end());
  }
  if (symbols.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "n-gram alphabet is empty");
  }
  model.alphabet_.assign(symbols.begin(), symbols.end());

  for (const auto& s : strings) {
    for (std::size_t i = 0; i <= s.size(); ++i) {
      const char32_t next = i < s.size() ? s[i] : NGramModel::kBoundary;
      auto& ctx = model.counts_[model.context_key(std::u32string_view(s).substr(0, i))];
      ++ctx.next[next];
      ++ctx.total;
    }
  }
  return model;
}

}  // namespace neography
