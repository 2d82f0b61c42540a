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

#ifndef NEOGRAPHY_PHONETIC_HPP_
#define NEOGRAPHY_PHONETIC_HPP_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "neography/lexicon.hpp"

// Homophone generation by contextual rewrite rules applied to closure
// ("musique" -> "muzik", "belle" -> "bel").
namespace neography::phonetic {

enum class Position { kAnywhere, kWordFinal };
enum class Preceding { kNone, kVowel };
enum class Following { kNone, kVowel, kEndOrConsonant };

struct RuleContext {
  Position position = Position::kAnywhere;
  Preceding require_preceding = Preceding::kNone;
  Following require_following = Following::kNone;
  // The match must not be preceded (resp. followed) by any of these.
  std::u32string forbid_preceding;
  std::u32string forbid_following;
};

struct RewriteRule {
  std::string name;
  std::u32string pattern;
  std::u32string replacement;
  RuleContext context;

  // Throws Error(kInvalidArgument) on an empty pattern or a lengthening rule.
  void validate() const;
  // Whether `pattern` occurs at `pos` in `word` with its context satisfied.
  bool matches_at(std::u32string_view word, std::size_t pos) const;
};

struct RuleSet {
  std::vector<RewriteRule> rules;
  std::size_t max_depth = 8;
  std::size_t max_set_size = 256;

  // Throws Error(kInvalidArgument) on an empty rule list or zero limits.
  void validate() const;

  // The default French rules, equal to data/rules/french_default.json.
  static RuleSet defaults();

  // {"max_depth": 8, "max_set_size": 256, "rules": [{"name": ..,
  //   "pattern": "e" | "patterns": [..], "replacement": "",
  //   "position": "anywhere"|"word-final",
  //   "require_preceding": "none"|"vowel",
  //   "require_following": "none"|"vowel"|"end-or-consonant",
  //   "forbid_preceding": "cps", "forbid_following": ".."}, ..]}
  // A "patterns" list expands into one rule per pattern.
  static RuleSet from_json(std::string_view document);
  static RuleSet load(const std::filesystem::path& path);
};

// One output per distinct match position, each rewriting that site only.
// Outputs that would be empty are dropped.
std::set<std::string> apply_rule(std::string_view word, const RewriteRule& rule);

struct ClosureResult {
  std::set<std::string> words;
  // Set when max_depth or max_set_size cut the expansion short.
  bool limit_exceeded = false;
  // Number of expansion rounds that produced new words.
  std::size_t depth = 0;
};

// Least fixpoint of every rule, seeded with {word}. Throws Error(kEmptyWord).
ClosureResult closure(std::string_view word, const RuleSet& rules);

struct HomophoneLexicon {
  Lexicon lexicon;
  // Seed words whose closure hit a limit.
  std::vector<std::string> truncated;
};

// Union of the closures of the top_k most frequent words (ties broken
// lexicographically). Each entry carries its source words and their summed
// frequency. Throws Error(kInsufficientLexicon) when `frequencies` has fewer
// than top_k entries.
HomophoneLexicon build_homophone_lexicon(const Lexicon& frequencies, std::size_t top_k,
                                         const RuleSet& rules);

}  // namespace neography::phonetic

#endif  // NEOGRAPHY_PHONETIC_HPP_
