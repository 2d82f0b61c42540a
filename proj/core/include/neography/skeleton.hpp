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

#ifndef NEOGRAPHY_SKELETON_HPP_
#define NEOGRAPHY_SKELETON_HPP_

#include <string>
#include <string_view>

#include "neography/char_class.hpp"
#include "neography/lexicon.hpp"
#include "neography/stochastic_regex.hpp"
#include "neography/weighted_automaton.hpp"

// Consonant-skeleton neographies ("text" -> "txt", "bonjour" -> "bjour").
namespace neography::skeleton {

struct SkeletonParams {
  // Skeletons made of a consonant body only.
  double p_pure = 0.80;
  // Split of the remaining mass: vowel prefix, vowel suffix, or both.
  double p_begin = 0.70;
  double p_end = 0.07;
  double p_both = 0.23;
  // Per interior position: kept vowel rather than consonant.
  double p_keep_vowel = 0.10;
  // Body continuation after each symbol.
  double p_continue = 0.5;
  CharClass vowels = CharClass::vowels();
  CharClass consonants = CharClass::consonants();

  // Throws Error(kInvalidArgument).
  void validate() const;

  // Reads a JSON object with any subset of the fields above ("vowels" and
  // "consonants" as member strings). Missing fields keep their defaults.
  static SkeletonParams from_json(std::string_view document);
};

// body     := CONSONANT (CONSONANT | VOWEL)*
// skeleton := body                           with p_pure
//           | VOWEL body | body VOWEL | VOWEL body VOWEL
//                        with (1 - p_pure) * (p_begin | p_end | p_both)
StochasticRegex skeleton_regex(const SkeletonParams& params = {});
WeightedAutomaton build_skeleton_automaton(const SkeletonParams& params = {});

// Deterministic skeletonizer: keeps the first character, drops the other
// vowels, and drops n/m after a (non-initial) vowel when followed by a
// consonant or the word end. Idempotent; never lengthens; never empty.
// Throws Error(kEmptyWord).
std::string skeletonize(std::string_view word);

// {skeletonize(w)}, deduplicated, each carrying the summed source
// frequencies and its source words. Throws Error(kEmptyLexicon).
Lexicon build_skeleton_lexicon(const Lexicon& lexicon);

}  // namespace neography::skeleton

#endif  // NEOGRAPHY_SKELETON_HPP_
