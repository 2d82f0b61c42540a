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

#ifndef NEOGRAPHY_REBUS_HPP_
#define NEOGRAPHY_REBUS_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neography/char_class.hpp"
#include "neography/weighted_automaton.hpp"

// Rebus neographies: digits and letters standing in for syllables or whole
// words ("l8er", "2m1", "2").
namespace neography::rebus {

struct RebusParams {
  // Mass of the single-symbol branch.
  double p_singleton = 0.5;
  // Single-symbol rebuses and their probabilities (sum to 1).
  std::vector<std::pair<char32_t, double>> singletons = default_singletons();
  // Mixed branch: per-character stop probability of the base length model.
  double p_stop = 0.5;
  // Relative class weights of the base model; the branch is the base model
  // conditioned on its constraints, so only length and class counts matter.
  double w_letter = 0.8;
  double w_digit = 0.18;
  double w_symbol = 0.02;
  CharClass letters = CharClass::letters();
  CharClass digits = CharClass::digits();
  CharClass symbols = CharClass::symbols();

  static std::vector<std::pair<char32_t, double>> default_singletons();

  // Throws Error(kInvalidArgument).
  void validate() const;
  // JSON object with any subset of the fields; "singletons" maps one-character
  // strings to probabilities.
  static RebusParams from_json(std::string_view document);
};

// Singleton branch: one symbol from the table. Mixed branch: at least one
// letter and at least one digit-or-symbol, never two digits in a row.
WeightedAutomaton build_rebus_automaton(const RebusParams& params = {});

// Grapheme-or-syllable -> replacement pairs, e.g. "de" -> "2", "ain" -> "1".
class RebusTable {
 public:
  struct Entry {
    std::u32string source;
    std::u32string replacement;
  };

  // Throws Error(kInvalidArgument) on an empty side or a replacement with no
  // digit or symbol.
  void add(std::string_view source, std::string_view replacement);
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  // Longest entry whose source occurs in `word` at `pos`.
  const Entry* longest_match(std::u32string_view word, std::size_t pos) const;

  // "source<TAB>replacement" per line; '#' comments and blank lines skipped.
  // Throws Error(kParseError) with a line number.
  static RebusTable parse(std::istream& in);
  static RebusTable load(const std::filesystem::path& path);
  // French table mirroring data/rebus/french.tsv.
  static RebusTable defaults();

 private:
  std::vector<Entry> entries_;
};

// Every string obtained by replacing a non-overlapping subset of
// longest-match occurrences with their replacements; always contains
// `word`. Throws Error(kEmptyWord).
std::set<std::string> rebusify(std::string_view word, const RebusTable& table);

}  // namespace neography::rebus

#endif  // NEOGRAPHY_REBUS_HPP_
