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

#ifndef NEOGRAPHY_STOCHASTIC_REGEX_HPP_
#define NEOGRAPHY_STOCHASTIC_REGEX_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "neography/char_class.hpp"

namespace neography {

// A regular expression whose alternations and repetitions carry
// probabilities, read generatively: a union samples one branch, a repeat
// runs its body again with the continue probability, an optional takes its
// body with the take probability, and a class emits one member uniformly.
//
// Values are immutable and cheap to copy (shared structure).
//
// JSON form, one tagged object per node:
//   {"lit": "a"}                       literal; a longer string is a concat
//   {"class": "VOWELS"}                built-in class, or
//   {"class": {"name": "ae", "members": "ae"}}
//   {"concat": [node, ...]}
//   {"union": [{"p": 0.8, "node": node}, ...]}
//   {"repeat": {"p": 0.5, "node": node}}
//   {"optional": {"p": 0.3, "node": node}}
class StochasticRegex {
 public:
  enum class Kind { kLiteral, kClass, kConcat, kUnion, kRepeat, kOptional };
  struct Branch;

  static StochasticRegex literal(char32_t c);
  static StochasticRegex text(std::u32string_view s);
  static StochasticRegex char_class(CharClass cls);
  static StochasticRegex concat(std::vector<StochasticRegex> children);
  static StochasticRegex alternation(std::vector<Branch> branches);
  static StochasticRegex repeat(StochasticRegex body, double continue_probability);
  static StochasticRegex optional(StochasticRegex body, double take_probability);

  Kind kind() const noexcept;
  char32_t literal_char() const;
  const CharClass& char_class() const;
  // Concat: the parts. Union: the branch nodes, parallel to weights().
  // Repeat/Optional: exactly one body.
  const std::vector<StochasticRegex>& children() const noexcept;
  const std::vector<double>& weights() const noexcept;
  // Continue probability of a repeat, take probability of an optional.
  double probability() const noexcept;

  // Throws Error(kInvalidRegex) when a union's probabilities are not all
  // positive or do not sum to 1 within 1e-9, a repeat probability lies
  // outside (0,1), or an optional probability lies outside [0,1].
  void validate() const;

  // Throws Error(kParseError) on malformed documents and Error(kInvalidRegex)
  // on probability violations.
  static StochasticRegex from_json(std::string_view document);
  std::string to_json() const;

 private:
  struct Node;
  explicit StochasticRegex(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct StochasticRegex::Branch {
  double probability;
  StochasticRegex node;
};

}  // namespace neography

#endif  // NEOGRAPHY_STOCHASTIC_REGEX_HPP_
