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

#include "neography/rr_metric.hpp"

#include <algorithm>
#include <numeric>

#include "neography/error.hpp"
#include "neography/text.hpp"

namespace neography::rr {

namespace {
__extension__ using Wide = __int128;
}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator < 0) {
    throw Error(ErrorCode::kInvalidArgument, "rational must be non-negative with positive denominator");
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
}

std::string Rational::format(int decimals) const {
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const Wide scaled = (static_cast<Wide>(num_) * scale * 2 + den_) / (2 * den_);
  const auto whole = static_cast<std::int64_t>(scaled / scale);
  std::string out = std::to_string(whole);
  if (decimals > 0) {
    std::string frac = std::to_string(static_cast<std::int64_t>(scaled % scale));
    out += '.' + std::string(static_cast<std::size_t>(decimals) - frac.size(), '0') + frac;
  }
  return out;
}

std::int64_t asym_distance(std::u32string_view label, std::u32string_view candidate,
                           const EditCosts& costs) {
  if (label.empty()) throw Error(ErrorCode::kEmptyLabel, "label must not be empty");
  // row[j] = cost of turning label[0..i) into candidate[0..j).
  std::vector<std::int64_t> row(candidate.size() + 1);
  for (std::size_t j = 0; j <= candidate.size(); ++j) {
    row[j] = static_cast<std::int64_t>(j) * costs.insertion;
  }
  for (std::size_t i = 1; i <= label.size(); ++i) {
    std::int64_t diagonal = row[0];
    row[0] += costs.deletion;
    for (std::size_t j = 1; j <= candidate.size(); ++j) {
      const std::int64_t keep =
          diagonal + (label[i - 1] == candidate[j - 1] ? 0 : costs.substitution);
      diagonal = row[j];
      row[j] = std::min({keep, row[j] + costs.deletion, row[j - 1] + costs.insertion});
    }
  }
  return row.back();
}

namespace {

std::u32string prepare(std::string_view s, const Options& options) {
  return text::to_nfc_u32(options.fold_case ? text::fold_case(s) : std::string(s));
}

}  // namespace

std::int64_t asym_distance(std::string_view label, std::string_view candidate,
                           const Options& options) {
  return asym_distance(prepare(label, options), prepare(candidate, options), options.costs);
}

RRResult recognition_rate(std::string_view label, std::string_view candidate,
                          const Options& options) {
  const std::u32string l = prepare(label, options);
  const std::u32string c = prepare(candidate, options);
  return {asym_distance(l, c, options.costs), static_cast<std::int64_t>(l.size())};
}

RRResult corpus_rr(const std::vector<std::pair<std::string, std::string>>& pairs,
                   const Options& options) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyCorpus, "no label/candidate pairs");
  RRResult total;
  for (const auto& [label, candidate] : pairs) {
    const RRResult one = recognition_rate(label, candidate, options);
    total.distance += one.distance;
    total.label_length += one.label_length;
  }
  return total;
}

double corpus_rr_macro(const std::vector<std::pair<std::string, std::string>>& pairs,
                       const Options& options) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyCorpus, "no label/candidate pairs");
  double sum = 0.0;
  for (const auto& [label, candidate] : pairs) {
    sum += recognition_rate(label, candidate, options).percent();
  }
  return sum / static_cast<double>(pairs.size());
}

}  // namespace neography::rr
