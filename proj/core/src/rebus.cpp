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

#include "neography/rebus.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <vector>

#include "json.hpp"
#include "neography/error.hpp"
#include "neography/text.hpp"

namespace neography::rebus {

std::vector<std::pair<char32_t, double>> RebusParams::default_singletons() {
  // '2' stands for "de", the most frequent French bigram; '4' is rare.
  return {{U'2', 0.35}, {U'1', 0.15}, {U'7', 0.08}, {U'9', 0.06}, {U'8', 0.06},
          {U'4', 0.03}, {U'b', 0.09}, {U'u', 0.09}, {U'r', 0.09}};
}

void RebusParams::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (!(p_singleton > 0.0 && p_singleton < 1.0)) bad("p_singleton must lie in (0,1)");
  if (!(p_stop > 0.0 && p_stop < 1.0)) bad("p_stop must lie in (0,1)");
  if (!(w_letter > 0.0) || !(w_digit > 0.0) || w_symbol < 0.0) {
    bad("letter and digit weights must be > 0, symbol weight >= 0");
  }
  if (singletons.empty()) bad("singleton table is empty");
  double sum = 0.0;
  for (const auto& [symbol, p] : singletons) {
    if (!(p > 0.0)) bad("singleton probabilities must be > 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) bad("singleton probabilities must sum to 1");
}

RebusParams RebusParams::from_json(std::string_view document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("rebus params: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "rebus params must be an object");
  RebusParams p;
  try {
    p.p_singleton = j.value("p_singleton", p.p_singleton);
    p.p_stop = j.value("p_stop", p.p_stop);
    p.w_letter = j.value("w_letter", p.w_letter);
    p.w_digit = j.value("w_digit", p.w_digit);
    p.w_symbol = j.value("w_symbol", p.w_symbol);
    if (j.contains("singletons")) {
      p.singletons.clear();
      for (const auto& [key, value] : j.at("singletons").items()) {
        const std::u32string symbol = text::to_nfc_u32(key);
        if (symbol.size() != 1) {
          throw Error(ErrorCode::kParseError, "singleton keys must be one character");
        }
        p.singletons.emplace_back(symbol.front(), value.get<double>());
      }
    }
    if (j.contains("letters")) {
      p.letters = CharClass("LETTERS", text::to_nfc_u32(j.at("letters").get<std::string>()));
    }
    if (j.contains("digits")) {
      p.digits = CharClass("DIGITS", text::to_nfc_u32(j.at("digits").get<std::string>()));
    }
    if (j.contains("symbols")) {
      p.symbols = CharClass("SYMBOLS", text::to_nfc_u32(j.at("symbols").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("rebus params: ") + e.what());
  }
  p.validate();
  return p;
}

WeightedAutomaton build_rebus_automaton(const RebusParams& params) {
  params.validate();
  AutomatonBuilder b;
  const StateId start = b.add_state();
  const StateId single = b.add_state();
  const StateId single_done = b.add_state();
  b.set_start(start);
  b.set_final(single_done, 1.0);
  b.add_transition(start, single, Label::epsilon(), params.p_singleton);
  for (const auto& [symbol, p] : params.singletons) {
    b.add_transition(single, single_done, Label::symbol(symbol), p);
  }

  // Mixed branch: a base model that continues with probability 1 - p_stop
  // and emits each class with a fixed weight, conditioned on the rebus
  // constraints by weight pushing. The probability of a string depends only
  // on its length and class counts. States are (seen letter, seen
  // digit-or-symbol, last emitted was a digit).
  struct Key {
    bool letter, other, last_digit;
    int index() const { return (letter ? 4 : 0) + (other ? 2 : 0) + (last_digit ? 1 : 0); }
  };
  const double go = 1.0 - params.p_stop;
  const double norm = params.w_letter + params.w_digit + params.w_symbol;
  struct Move {
    Key to;
    const CharClass* cls;
    double weight;
  };
  auto moves = [&](Key k) {
    std::vector<Move> out{{{true, k.other, false}, &params.letters, params.w_letter}};
    if (!k.last_digit) out.push_back({{k.letter, true, true}, &params.digits, params.w_digit});
    if (params.w_symbol > 0.0) {
      out.push_back({{k.letter, true, false}, &params.symbols, params.w_symbol});
    }
    return out;
  };
  auto stop_of = [&](Key k) { return k.letter && k.other ? params.p_stop : 0.0; };

  std::vector<Key> keys;
  int slot[8];
  std::fill(std::begin(slot), std::end(slot), -1);
  auto visit = [&](Key k) {
    if (slot[k.index()] < 0) {
      slot[k.index()] = static_cast<int>(keys.size());
      keys.push_back(k);
    }
    return slot[k.index()];
  };
  visit({false, false, false});
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (const Move& m : moves(keys[i])) visit(m.to);
  }

  // beta(k): base-model probability of completing a valid string from k.
  const auto n = static_cast<Eigen::Index>(keys.size());
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd stop(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Key k = keys[static_cast<std::size_t>(i)];
    stop(i) = stop_of(k);
    for (const Move& m : moves(k)) system(i, slot[m.to.index()]) -= go * m.weight / norm;
  }
  const Eigen::VectorXd beta = system.partialPivLu().solve(stop);

  std::vector<StateId> ids;
  for (std::size_t i = 0; i < keys.size(); ++i) ids.push_back(b.add_state());
  b.add_transition(start, ids[0], Label::epsilon(), 1.0 - params.p_singleton);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Key k = keys[static_cast<std::size_t>(i)];
    const StateId from = ids[static_cast<std::size_t>(i)];
    if (stop(i) > 0.0) b.set_final(from, stop(i) / beta(i));
    for (const Move& m : moves(k)) {
      const int to = slot[m.to.index()];
      b.add_transition(from, ids[static_cast<std::size_t>(to)], Label::of_class(*m.cls),
                       go * m.weight / norm * beta(to) / beta(i));
    }
  }
  return std::move(b).build();
}

void RebusTable::add(std::string_view source, std::string_view replacement) {
  Entry e{text::to_nfc_u32(source), text::to_nfc_u32(replacement)};
  if (e.source.empty() || e.replacement.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "rebus entries need both sides non-empty");
  }
  bool has_digit_or_symbol = false;
  for (char32_t c : e.replacement) {
    if (CharClass::digits().contains(c) || CharClass::symbols().contains(c)) {
      has_digit_or_symbol = true;
    }
  }
  if (!has_digit_or_symbol) {
    throw Error(ErrorCode::kInvalidArgument,
                "rebus replacement '" + std::string(replacement) + "' has no digit or symbol");
  }
  entries_.push_back(std::move(e));
}

const RebusTable::Entry* RebusTable::longest_match(std::u32string_view word,
                                                   std::size_t pos) const {
  const Entry* best = nullptr;
  const std::u32string_view rest = word.substr(pos);
  for (const Entry& e : entries_) {
    if (rest.substr(0, e.source.size()) == e.source &&
        (best == nullptr || e.source.size() > best->source.size())) {
      best = &e;
    }
  }
  return best;
}

RebusTable RebusTable::parse(std::istream& in) {
  RebusTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::kParseError, "expected source<TAB>replacement", line_no);
    }
    try {
      table.add(std::string_view(line).substr(0, tab), std::string_view(line).substr(tab + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, e.what(), line_no);
    }
  }
  return table;
}

RebusTable RebusTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return parse(in);
}

RebusTable RebusTable::defaults() {
  RebusTable t;
  for (const auto& [src, rep] : std::initializer_list<std::pair<const char*, const char*>>{
           {"de", "2"},     {"deux", "2"},  {"un", "1"},    {"in", "1"},
           {"ain", "1"},    {"ein", "1"},   {"ien", "1"},   {"huit", "8"},
           {"ate", "8"},    {"quatre", "4"}, {"neuf", "9"}, {"sept", "7"},
           {"cet", "7"},    {"cette", "7"}}) {
    t.add(src, rep);
  }
  return t;
}

std::set<std::string> rebusify(std::string_view word, const RebusTable& table) {
  const std::u32string w = text::to_nfc_u32(word);
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "cannot rebusify an empty word");

  std::set<std::string> out;
  std::u32string current;
  // Depth-first over positions: copy the character, or take the longest
  // match starting here and jump past it.
  auto walk = [&](auto&& self, std::size_t pos) -> void {
    if (pos == w.size()) {
      out.insert(text::encode_utf8(current));
      return;
    }
    current.push_back(w[pos]);
    self(self, pos + 1);
    current.pop_back();
    if (const auto* m = table.longest_match(w, pos)) {
      const std::size_t mark = current.size();
      current += m->replacement;
      self(self, pos + m->source.size());
      current.resize(mark);
    }
  };
  walk(walk, 0);
  return out;
}

}  // namespace neography::rebus
