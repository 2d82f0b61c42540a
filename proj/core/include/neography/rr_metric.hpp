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

#ifndef NEOGRAPHY_RR_METRIC_HPP_
#define NEOGRAPHY_RR_METRIC_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Character-level recognition rate derived from an asymmetric Levenshtein
// distance: deleting a label character or substituting one costs 1,
// inserting an extra character is free, and
//   RR = 100 * (#label - D) / #label.
// Free insertions mean over-segmentation (a substitution plus an insertion)
// is only charged once, and extra characters in the candidate are never
// penalized.
namespace neography::rr {

struct EditCosts {
  std::int64_t deletion = 1;
  std::int64_t substitution = 1;
  std::int64_t insertion = 0;
};

// Non-negative rational, always stored in lowest terms.
class Rational {
 public:
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  // Decimal rendering rounded half-up, e.g. 100/3 -> "33.33".
  std::string format(int decimals = 2) const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

struct RRResult {
  std::int64_t distance = 0;
  std::int64_t label_length = 0;

  // Exact 100 * (label_length - distance) / label_length.
  Rational rr() const { return Rational(100 * (label_length - distance), label_length); }
  double percent() const { return rr().to_double(); }
};

struct Options {
  EditCosts costs;
  bool fold_case = false;
};

// Minimum-cost edit script turning `label` into `candidate`. Throws
// Error(kEmptyLabel) when the label is empty.
std::int64_t asym_distance(std::u32string_view label, std::u32string_view candidate,
                           const EditCosts& costs = {});
// UTF-8 overload: NFC-normalizes (and optionally case-folds) both sides.
std::int64_t asym_distance(std::string_view label, std::string_view candidate,
                           const Options& options = {});

RRResult recognition_rate(std::string_view label, std::string_view candidate,
                          const Options& options = {});

// Character-weighted (micro) average: 100 * (sum #label - sum D) / sum #label.
// Throws Error(kEmptyCorpus) for an empty list.
RRResult corpus_rr(const std::vector<std::pair<std::string, std::string>>& pairs,
                   const Options& options = {});

// Unweighted mean of per-pair RR values, in percent.
double corpus_rr_macro(const std::vector<std::pair<std::string, std::string>>& pairs,
                       const Options& options = {});

}  // namespace neography::rr

#endif  // NEOGRAPHY_RR_METRIC_HPP_
