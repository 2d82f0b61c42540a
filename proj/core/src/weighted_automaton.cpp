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

#include "neography/weighted_automaton.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "neography/error.hpp"
#include "neography/text.hpp"

namespace neography {

Label Label::symbol(char32_t c) {
  Label l;
  l.kind_ = Kind::kSymbol;
  l.symbol_ = c;
  return l;
}

Label Label::of_class(CharClass cls) {
  Label l;
  l.kind_ = Kind::kClass;
  l.class_ = std::make_shared<const CharClass>(std::move(cls));
  return l;
}

double Label::emission(char32_t c) const {
  switch (kind_) {
    case Kind::kEpsilon:
      return 0.0;
    case Kind::kSymbol:
      return c == symbol_ ? 1.0 : 0.0;
    case Kind::kClass:
      return class_->contains(c) ? 1.0 / static_cast<double>(class_->size()) : 0.0;
  }
  return 0.0;
}

std::span<const Transition> WeightedAutomaton::outgoing(StateId s) const {
  return std::span<const Transition>(transitions_).subspan(
      offsets_.at(s), offsets_.at(s + 1) - offsets_.at(s));
}

double WeightedAutomaton::log_probability(std::u32string_view s) const {
  constexpr double kReject = -std::numeric_limits<double>::infinity();
  const std::size_t n = num_states();
  std::vector<double> alpha(n, 0.0);
  std::vector<double> emitted(n, 0.0);
  for (const auto& [t, mass] : closure_[start_]) alpha[t] += mass;

  double log_scale = 0.0;
  for (char32_t c : s) {
    std::fill(emitted.begin(), emitted.end(), 0.0);
    bool any = false;
    for (StateId q = 0; q < n; ++q) {
      if (alpha[q] == 0.0) continue;
      for (const Transition& tr : outgoing(q)) {
        const double e = tr.label.emission(c);
        if (e == 0.0) continue;
        emitted[tr.to] += alpha[q] * tr.probability * e;
        any = true;
      }
    }
    if (!any) return kReject;
    std::fill(alpha.begin(), alpha.end(), 0.0);
    double total = 0.0;
    for (StateId q = 0; q < n; ++q) {
      if (emitted[q] == 0.0) continue;
      for (const auto& [t, mass] : closure_[q]) {
        alpha[t] += emitted[q] * mass;
        total += emitted[q] * mass;
      }
    }
    if (total <= 0.0) return kReject;
    log_scale += std::log(total);
    for (double& a : alpha) a /= total;
  }

  double accept = 0.0;
  for (StateId q = 0; q < n; ++q) accept += alpha[q] * final_[q];
  if (accept <= 0.0) return kReject;
  return log_scale + std::log(accept);
}

double WeightedAutomaton::probability(std::u32string_view s) const {
  return std::exp(log_probability(s));
}

bool WeightedAutomaton::accepts(std::u32string_view s) const {
  return std::isfinite(log_probability(s));
}

std::optional<double> WeightedAutomaton::score(std::string_view utf8) const {
  const double lp = log_probability(text::to_nfc_u32(utf8));
  if (!std::isfinite(lp)) return std::nullopt;
  return lp >= 0.0 ? 0.0 : -lp;
}

double WeightedAutomaton::stochasticity_defect() const {
  double worst = 0.0;
  for (StateId q = 0; q < num_states(); ++q) {
    double mass = final_[q];
    for (const Transition& tr : outgoing(q)) mass += tr.probability;
    worst = std::max(worst, std::abs(mass - 1.0));
  }
  return worst;
}

std::vector<char32_t> WeightedAutomaton::alphabet() const {
  std::set<char32_t> symbols;
  for (const Transition& tr : transitions_) {
    if (tr.label.kind() == Label::Kind::kSymbol) {
      symbols.insert(tr.label.symbol());
    } else if (tr.label.kind() == Label::Kind::kClass) {
      const auto& m = tr.label.char_class().members();
      symbols.insert(m.begin(), m.end());
    }
  }
  return {symbols.begin(), symbols.end()};
}

StateId AutomatonBuilder::add_state() {
  final_.push_back(0.0);
  return static_cast<StateId>(final_.size() - 1);
}

void AutomatonBuilder::add_transition(StateId from, StateId to, Label label,
                                      double probability) {
  if (from >= final_.size() || to >= final_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "transition references unknown state");
  }
  if (probability < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "negative transition probability");
  }
  if (probability == 0.0) return;
  transitions_.push_back({from, to, std::move(label), probability});
}

void AutomatonBuilder::set_start(StateId s) {
  if (s >= final_.size()) throw Error(ErrorCode::kInvalidArgument, "unknown start state");
  start_ = s;
}

void AutomatonBuilder::set_final(StateId s, double probability) {
  if (s >= final_.size()) throw Error(ErrorCode::kInvalidArgument, "unknown final state");
  if (probability < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "negative final probability");
  }
  final_[s] = probability;
}

namespace {

std::vector<bool> reachable(std::size_t n, const std::vector<std::vector<StateId>>& adj,
                            std::vector<StateId> seeds) {
  std::vector<bool> seen(n, false);
  for (StateId s : seeds) seen[s] = true;
  while (!seeds.empty()) {
    const StateId s = seeds.back();
    seeds.pop_back();
    for (StateId t : adj[s]) {
      if (!seen[t]) {
        seen[t] = true;
        seeds.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace

WeightedAutomaton AutomatonBuilder::build() && {
  const std::size_t n = final_.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "automaton has no states");

  std::vector<std::vector<StateId>> forward(n), backward(n), eps(n);
  for (const Transition& tr : transitions_) {
    forward[tr.from].push_back(tr.to);
    backward[tr.to].push_back(tr.from);
    if (tr.label.is_epsilon()) eps[tr.from].push_back(tr.to);
  }
  std::vector<StateId> finals;
  for (StateId s = 0; s < n; ++s) {
    if (final_[s] > 0.0) finals.push_back(s);
  }
  const auto from_start = reachable(n, forward, {start_});
  const auto to_final = reachable(n, backward, finals);
  for (StateId s = 0; s < n; ++s) {
    if (!from_start[s] || !to_final[s]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "state " + std::to_string(s) +
                      (from_start[s] ? " cannot reach a final state"
                                     : " is unreachable from the start state"));
    }
  }

  WeightedAutomaton a;
  a.start_ = start_;
  a.final_ = std::move(final_);
  a.transitions_ = std::move(transitions_);
  std::stable_sort(a.transitions_.begin(), a.transitions_.end(),
                   [](const Transition& x, const Transition& y) { return x.from < y.from; });
  a.offsets_.assign(n + 1, 0);
  for (const Transition& tr : a.transitions_) ++a.offsets_[tr.from + 1];
  for (std::size_t s = 0; s < n; ++s) a.offsets_[s + 1] += a.offsets_[s];

  // Epsilon closure: C = (I - E)^-1, masked by structural epsilon
  // reachability so that rounding noise never turns a rejection into a tiny
  // acceptance.
  a.closure_.assign(n, {});
  const bool has_epsilon = std::any_of(
      a.transitions_.begin(), a.transitions_.end(),
      [](const Transition& tr) { return tr.label.is_epsilon(); });
  if (!has_epsilon) {
    for (StateId s = 0; s < n; ++s) a.closure_[s].push_back({s, 1.0});
    return a;
  }
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n);
  for (const Transition& tr : a.transitions_) {
    if (tr.label.is_epsilon()) system(tr.from, tr.to) -= tr.probability;
  }
  const Eigen::MatrixXd closure =
      system.partialPivLu().solve(Eigen::MatrixXd::Identity(n, n));
  for (StateId s = 0; s < n; ++s) {
    const auto eps_reach = reachable(n, eps, {s});
    for (StateId t = 0; t < n; ++t) {
      if (eps_reach[t] && closure(s, t) > 0.0) a.closure_[s].push_back({t, closure(s, t)});
    }
  }
  return a;
}

namespace {

struct Fragment {
  StateId in;
  StateId out;
};

Fragment build_fragment(const StochasticRegex& r, AutomatonBuilder& b) {
  using Kind = StochasticRegex::Kind;
  switch (r.kind()) {
    case Kind::kLiteral:
    case Kind::kClass: {
      const Fragment f{b.add_state(), b.add_state()};
      b.add_transition(f.in, f.out,
                       r.kind() == Kind::kLiteral ? Label::symbol(r.literal_char())
                                                  : Label::of_class(r.char_class()),
                       1.0);
      return f;
    }
    case Kind::kConcat: {
      if (r.children().empty()) {
        const StateId s = b.add_state();
        return {s, s};
      }
      Fragment whole = build_fragment(r.children().front(), b);
      for (std::size_t i = 1; i < r.children().size(); ++i) {
        const Fragment next = build_fragment(r.children()[i], b);
        b.add_transition(whole.out, next.in, Label::epsilon(), 1.0);
        whole.out = next.out;
      }
      return whole;
    }
    case Kind::kUnion: {
      const Fragment f{b.add_state(), b.add_state()};
      for (std::size_t i = 0; i < r.children().size(); ++i) {
        const Fragment branch = build_fragment(r.children()[i], b);
        b.add_transition(f.in, branch.in, Label::epsilon(), r.weights()[i]);
        b.add_transition(branch.out, f.out, Label::epsilon(), 1.0);
      }
      return f;
    }
    case Kind::kRepeat: {
      const Fragment f{b.add_state(), b.add_state()};
      const Fragment body = build_fragment(r.children().front(), b);
      b.add_transition(f.in, body.in, Label::epsilon(), r.probability());
      b.add_transition(body.out, f.in, Label::epsilon(), 1.0);
      b.add_transition(f.in, f.out, Label::epsilon(), 1.0 - r.probability());
      return f;
    }
    case Kind::kOptional: {
      const Fragment f{b.add_state(), b.add_state()};
      if (r.probability() > 0.0) {
        const Fragment body = build_fragment(r.children().front(), b);
        b.add_transition(f.in, body.in, Label::epsilon(), r.probability());
        b.add_transition(body.out, f.out, Label::epsilon(), 1.0);
      }
      b.add_transition(f.in, f.out, Label::epsilon(), 1.0 - r.probability());
      return f;
    }
  }
  throw Error(ErrorCode::kInvalidRegex, "unknown regex node");
}

}  // namespace

WeightedAutomaton compile(const StochasticRegex& regex) {
  regex.validate();
  AutomatonBuilder builder;
  const Fragment top = build_fragment(regex, builder);
  builder.set_start(top.in);
  builder.set_final(top.out, 1.0);
  return std::move(builder).build();
}

}  // namespace neography
