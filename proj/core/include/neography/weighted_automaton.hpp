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

#ifndef NEOGRAPHY_WEIGHTED_AUTOMATON_HPP_
#define NEOGRAPHY_WEIGHTED_AUTOMATON_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neography/char_class.hpp"
#include "neography/stochastic_regex.hpp"

namespace neography {

using StateId = std::uint32_t;

// Transition label: epsilon, a single character, or a character class whose
// transition mass is shared uniformly among its members.
class Label {
 public:
  enum class Kind { kEpsilon, kSymbol, kClass };

  static Label epsilon() { return Label(); }
  static Label symbol(char32_t c);
  static Label of_class(CharClass cls);

  Kind kind() const noexcept { return kind_; }
  bool is_epsilon() const noexcept { return kind_ == Kind::kEpsilon; }
  char32_t symbol() const noexcept { return symbol_; }
  const CharClass& char_class() const { return *class_; }

  // Fraction of the transition's probability that goes to emitting `c`.
  double emission(char32_t c) const;

 private:
  Label() = default;
  Kind kind_ = Kind::kEpsilon;
  char32_t symbol_ = 0;
  std::shared_ptr<const CharClass> class_;
};

struct Transition {
  StateId from;
  StateId to;
  Label label;
  double probability;
};

// A probabilistic acceptor over characters. Immutable once built; the
// epsilon-closure needed for scoring is computed at construction.
class WeightedAutomaton {
 public:
  std::size_t num_states() const noexcept { return final_.size(); }
  StateId start() const noexcept { return start_; }
  double final_probability(StateId s) const { return final_.at(s); }
  std::span<const Transition> transitions() const noexcept { return transitions_; }
  std::span<const Transition> outgoing(StateId s) const;

  // Total probability over all accepting paths labelled `s` (forward
  // algorithm with epsilon closure).
  double probability(std::u32string_view s) const;
  // Natural log of probability(); -infinity when rejected. Uses per-step
  // rescaling, so long strings do not underflow.
  double log_probability(std::u32string_view s) const;
  // Cost = -ln P(s), or nullopt (REJECT) when P(s) = 0. Input is NFC-normalized.
  std::optional<double> score(std::string_view utf8) const;
  bool accepts(std::u32string_view s) const;

  // Largest deviation from 1 of (outgoing mass + final probability) over states.
  double stochasticity_defect() const;
  bool is_stochastic(double tolerance = 1e-9) const {
    return stochasticity_defect() <= tolerance;
  }

  // Every concrete character some transition can emit, sorted.
  std::vector<char32_t> alphabet() const;

 private:
  friend class AutomatonBuilder;
  WeightedAutomaton() = default;

  StateId start_ = 0;
  std::vector<double> final_;
  std::vector<Transition> transitions_;    // sorted by `from`
  std::vector<std::size_t> offsets_;       // per state, into transitions_
  // closure_[s] = (t, mass of epsilon paths s ~> t), including s itself.
  std::vector<std::vector<std::pair<StateId, double>>> closure_;
};

class AutomatonBuilder {
 public:
  StateId add_state();
  // Zero-probability transitions are dropped.
  void add_transition(StateId from, StateId to, Label label, double probability);
  void set_start(StateId s);
  void set_final(StateId s, double probability);

  // Throws Error(kInvalidArgument) if some state is unreachable from the
  // start state or cannot reach a final state, or on negative probabilities.
  WeightedAutomaton build() &&;

 private:
  std::vector<double> final_;
  std::vector<Transition> transitions_;
  StateId start_ = 0;
};

// Thompson-style construction. Throws Error(kInvalidRegex) if the regex
// violates its probability invariants.
WeightedAutomaton compile(const StochasticRegex& regex);

}  // namespace neography

#endif  // NEOGRAPHY_WEIGHTED_AUTOMATON_HPP_
