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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "neography/error.hpp"
#include "neography/rebus.hpp"
#include "neography/text.hpp"
#include "test_support.hpp"

namespace neography::rebus {
namespace {

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

TEST(RebusAutomaton, Examples) {
  const RebusParams params;
  const auto a = build_rebus_automaton(params);
  EXPECT_TRUE(a.is_stochastic());
  double p2 = 0.0;
  for (const auto& [c, p] : params.singletons) {
    if (c == U'2') p2 = p;
  }
  EXPECT_GE(a.probability(U"2"), params.p_singleton * p2 - 1e-15);
  EXPECT_GT(a.probability(U"l8er"), 0.0);
  EXPECT_GT(a.probability(U"a2m1"), 0.0);
  EXPECT_GT(a.probability(U"sk8"), 0.0);
  EXPECT_GT(a.probability(U"2m1"), 0.0);
  EXPECT_FALSE(a.accepts(U"48"));
  EXPECT_FALSE(a.accepts(U"a48"));
  EXPECT_FALSE(a.accepts(U"later"));
  EXPECT_FALSE(a.accepts(U""));
  EXPECT_FALSE(a.accepts(U"3"));
}

// Base-model mass of valid mixed strings, by inclusion-exclusion over class
// sequences: no adjacent digits, minus all-letter, minus letter-free.
double mixed_mass(const RebusParams& p) {
  const double norm = p.w_letter + p.w_digit + p.w_symbol;
  const double l = p.w_letter / norm, d = p.w_digit / norm, s = p.w_symbol / norm;
  const double go = 1.0 - p.p_stop;
  double any_end_other = 1.0, any_end_digit = 0.0;
  double free_end_other = 1.0, free_end_digit = 0.0;
  double letters_only = 1.0, scale = 1.0, total = 0.0;
  for (int n = 1; n < 4000; ++n) {
    const double a = (any_end_other + any_end_digit) * (l + s);
    any_end_digit = any_end_other * d;
    any_end_other = a;
    const double f = (free_end_other + free_end_digit) * s;
    free_end_digit = free_end_other * d;
    free_end_other = f;
    letters_only *= l;
    scale *= go;
    total += p.p_stop * scale *
             (any_end_other + any_end_digit - letters_only - free_end_other - free_end_digit);
  }
  return total;
}

TEST(RebusAutomaton, MixedBranchProbability) {
  const RebusParams p;
  const auto a = build_rebus_automaton(p);
  const double norm = p.w_letter + p.w_digit + p.w_symbol;
  const double letter = p.w_letter / norm / 39.0;
  const double digit = p.w_digit / norm / 10.0;
  const double symbol = p.w_symbol / norm / 2.0;
  const double go = 1.0 - p.p_stop;
  const double z = mixed_mass(p);
  auto expected = [&](int n, double emissions) {
    return (1.0 - p.p_singleton) * p.p_stop * std::pow(go, n) * emissions / z;
  };
  EXPECT_NEAR(a.probability(U"a2"), expected(2, letter * digit), 1e-15);
  EXPECT_NEAR(a.probability(U"2a"), expected(2, letter * digit), 1e-15);
  EXPECT_NEAR(a.probability(U"a+b"), expected(3, letter * letter * symbol), 1e-15);
  EXPECT_NEAR(a.probability(U"2vait"), a.probability(U"vait2"), 1e-18);
  EXPECT_NEAR(a.probability(U"l8er"), a.probability(U"ler8"), 1e-18);
  EXPECT_GT(a.probability(U"2vait"), a.probability(U"zvai+"));
}

TEST(RebusAutomaton, ExhaustiveConstraints) {
  const auto a = build_rebus_automaton();
  const RebusParams params;
  std::size_t accepted = 0;
  testing::for_each_string(U"a28+", 6, [&](const std::u32string& s) {
    if (!a.accepts(s)) return;
    ++accepted;
    for (std::size_t i = 1; i < s.size(); ++i) {
      ASSERT_FALSE(is_digit(s[i - 1]) && is_digit(s[i])) << text::encode_utf8(s);
    }
    if (s.size() >= 2) {
      ASSERT_TRUE(s.find(U'a') != std::u32string::npos) << text::encode_utf8(s);
      ASSERT_TRUE(s.find_first_of(U"28+") != std::u32string::npos) << text::encode_utf8(s);
    } else {
      ASSERT_EQ(s.size(), 1u);
      bool listed = false;
      for (const auto& [c, p] : params.singletons) listed = listed || c == s[0];
      ASSERT_TRUE(listed) << text::encode_utf8(s);
    }
  });
  EXPECT_GT(accepted, 100u);
}

TEST(RebusParams, Validation) {
  RebusParams p;
  EXPECT_NO_THROW(p.validate());
  p.singletons.front().second += 0.1;
  EXPECT_THROW(p.validate(), Error);
  p = RebusParams{};
  p.p_singleton = 1.0;
  EXPECT_THROW(p.validate(), Error);
  EXPECT_THROW(build_rebus_automaton(p), Error);
}

TEST(RebusParams, FromJson) {
  const auto p = RebusParams::from_json(R"({"p_singleton": 0.4, "singletons": {"2": 0.75, "4": 0.25}})");
  EXPECT_DOUBLE_EQ(p.p_singleton, 0.4);
  ASSERT_EQ(p.singletons.size(), 2u);
  const auto a = build_rebus_automaton(p);
  EXPECT_NEAR(a.probability(U"2"), 0.4 * 0.75, 1e-15);
  EXPECT_FALSE(a.accepts(U"u"));
  EXPECT_THROW(RebusParams::from_json(R"({"singletons": {"22": 1.0}})"), Error);
}

TEST(Rebusify, Examples) {
  RebusTable skate;
  skate.add("ate", "8");
  EXPECT_EQ(rebusify("skate", skate), (std::set<std::string>{"skate", "sk8"}));
  EXPECT_EQ(rebusify("bjr", skate), (std::set<std::string>{"bjr"}));

  RebusTable t;
  t.add("de", "2");
  t.add("ain", "1");
  EXPECT_EQ(rebusify("demain", t), (std::set<std::string>{"demain", "2main", "dem1", "2m1"}));
  EXPECT_THROW(rebusify("", t), Error);
}

TEST(Rebusify, LongestMatchWins) {
  RebusTable t;
  t.add("in", "1");
  t.add("ain", "1");
  t.add("de", "2");
  t.add("deux", "2");
  // At position 1 "ain" beats "in"; at position 2 only "in" starts.
  EXPECT_EQ(rebusify("main", t), (std::set<std::string>{"main", "m1", "ma1"}));
  EXPECT_EQ(rebusify("deux", t), (std::set<std::string>{"deux", "2"}));
}

TEST(Rebusify, OutputsDifferOnlyAtTableSites) {
  const auto table = RebusTable::defaults();
  for (const char* word : {"demain", "maintenant", "cette", "quatre", "sept", "rien"}) {
    const auto out = rebusify(word, table);
    EXPECT_TRUE(out.count(word)) << word;
    for (const auto& v : out) {
      // Undoing each replacement recovers the word: every digit stands for
      // some table source.
      std::set<std::string> back{v};
      bool recovered = v == word;
      for (int round = 0; round < 4 && !recovered; ++round) {
        std::set<std::string> next;
        for (const auto& s : back) {
          for (const auto& e : table.entries()) {
            const std::string rep = text::encode_utf8(e.replacement);
            for (auto pos = s.find(rep); pos != std::string::npos; pos = s.find(rep, pos + 1)) {
              std::string undone = s;
              undone.replace(pos, rep.size(), text::encode_utf8(e.source));
              recovered = recovered || undone == word;
              next.insert(undone);
            }
          }
        }
        back = std::move(next);
      }
      EXPECT_TRUE(recovered) << word << " -> " << v;
    }
  }
}

TEST(RebusTable, ParseTsv) {
  std::istringstream in("# comment\n\nde\t2\nate\t8\r\n");
  const auto t = RebusTable::parse(in);
  ASSERT_EQ(t.entries().size(), 2u);
  EXPECT_EQ(t.entries()[1].source, U"ate");
  EXPECT_EQ(t.entries()[1].replacement, U"8");
}

TEST(RebusTable, ParseErrorsCarryLineNumbers) {
  for (const char* doc : {"de\t2\nbad line\n", "de\t2\nx\ty\n", "de\t2\n\t3\n"}) {
    std::istringstream in(doc);
    try {
      RebusTable::parse(in);
      ADD_FAILURE() << doc;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError);
      EXPECT_EQ(e.line(), 2u);
    }
  }
}

TEST(RebusTable, ShippedFileMatchesDefaults) {
  const auto file = RebusTable::load(testing::data_path("rebus/french.tsv"));
  const auto builtin = RebusTable::defaults();
  ASSERT_EQ(file.entries().size(), builtin.entries().size());
  for (std::size_t i = 0; i < file.entries().size(); ++i) {
    EXPECT_EQ(file.entries()[i].source, builtin.entries()[i].source);
    EXPECT_EQ(file.entries()[i].replacement, builtin.entries()[i].replacement);
  }
}

}  // namespace
}  // namespace neography::rebus
