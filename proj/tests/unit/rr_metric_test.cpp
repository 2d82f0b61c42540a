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

#include <random>

#include "neography/error.hpp"
#include "neography/rr_metric.hpp"
#include "neography/text.hpp"

namespace neography::rr {
namespace {

// Textbook full-table LCS length.
std::int64_t lcs(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<std::int64_t>> t(a.size() + 1, std::vector<std::int64_t>(b.size() + 1));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  return t[a.size()][b.size()];
}

std::u32string random_string(std::mt19937_64& rng, std::size_t alphabet, std::size_t min_len,
                             std::size_t max_len) {
  const std::size_t n = min_len + rng() % (max_len - min_len + 1);
  std::u32string s;
  for (std::size_t i = 0; i < n; ++i) s += static_cast<char32_t>(U'a' + rng() % alphabet);
  return s;
}

TEST(AsymDistance, WorkedExample) {
  EXPECT_EQ(asym_distance("bjr", "loj.t"), 2);
  EXPECT_EQ(asym_distance("abc", "abc"), 0);
  EXPECT_EQ(asym_distance("abc", "xaxbxcx"), 0);
  EXPECT_EQ(asym_distance("abc", ""), 3);
}

TEST(AsymDistance, IsNotSymmetric) {
  EXPECT_EQ(asym_distance("a", "ab"), 0);
  EXPECT_EQ(asym_distance("ab", "a"), 1);
}

TEST(AsymDistance, EmptyLabel) {
  try {
    asym_distance("", "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyLabel);
  }
}

TEST(AsymDistance, AccentsCountOnce) {
  EXPECT_EQ(asym_distance("été", "ete"), 2);
  // Decomposed input is normalized first.
  EXPECT_EQ(asym_distance("e\xCC\x81t\xC3\xA9", "été"), 0);
}

TEST(AsymDistance, EqualsLabelLengthMinusLcs) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t alphabet = 2 + rng() % 29;
    const auto label = random_string(rng, alphabet, 1, 40);
    const auto candidate = random_string(rng, alphabet, 0, 40);
    const std::int64_t d = asym_distance(label, candidate);
    ASSERT_EQ(d, static_cast<std::int64_t>(label.size()) - lcs(label, candidate));
    ASSERT_GE(d, 0);
    ASSERT_LE(d, static_cast<std::int64_t>(label.size()));
  }
}

TEST(AsymDistance, CustomCosts) {
  const EditCosts symmetric{1, 1, 1};
  EXPECT_EQ(asym_distance(U"a", U"ab", symmetric), 1);
  EXPECT_EQ(asym_distance(U"kitten", U"sitting", symmetric), 3);
}

TEST(RecognitionRate, WorkedExampleIsExactlyOneThird) {
  const RRResult r = recognition_rate("bjr", "loj.t");
  EXPECT_EQ(r.distance, 2);
  EXPECT_EQ(r.label_length, 3);
  EXPECT_EQ(r.rr(), Rational(100, 3));
  EXPECT_EQ(r.rr().format(2), "33.33");
}

TEST(RecognitionRate, Extremes) {
  EXPECT_EQ(recognition_rate("salut", "salut").rr(), Rational(100, 1));
  EXPECT_EQ(recognition_rate("abc", "xyz").rr(), Rational(0, 1));
  EXPECT_EQ(recognition_rate("abc", "xyz").rr().format(2), "0.00");
}

TEST(RecognitionRate, FoldCaseOption) {
  EXPECT_EQ(recognition_rate("Bjr", "bjr").distance, 1);
  Options o;
  o.fold_case = true;
  EXPECT_EQ(recognition_rate("Bjr", "bjr", o).distance, 0);
  EXPECT_EQ(recognition_rate("ÉTÉ", "été", o).distance, 0);
}

TEST(RecognitionRate, FreeInsertionIsMonotone) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto label = random_string(rng, 5, 1, 12);
    const auto c = random_string(rng, 5, 0, 12);
    std::u32string longer = c;
    for (int k = static_cast<int>(rng() % 4); k > 0; --k) {
      longer.insert(longer.begin() + static_cast<std::ptrdiff_t>(rng() % (longer.size() + 1)),
                    static_cast<char32_t>(U'a' + rng() % 6));
    }
    const auto base = recognition_rate(text::encode_utf8(label), text::encode_utf8(c)).rr();
    const auto more = recognition_rate(text::encode_utf8(label), text::encode_utf8(longer)).rr();
    ASSERT_TRUE(base <= more);
  }
}

TEST(Rational, FormatsWithHalfUpRounding) {
  EXPECT_EQ(Rational(200, 3).format(2), "66.67");
  EXPECT_EQ(Rational(1, 8).format(2), "0.13");
  EXPECT_EQ(Rational(1, 8).format(0), "0");
  EXPECT_EQ(Rational(5, 2).format(0), "3");
  EXPECT_EQ(Rational(100, 1).format(4), "100.0000");
  EXPECT_EQ(Rational(1, 3).format(4), "0.3333");
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(CorpusRr, MicroAverage) {
  EXPECT_EQ(corpus_rr({{"ab", "ab"}, {"cd", "cd"}}).rr(), Rational(100, 1));
  const auto r = corpus_rr({{"bjr", "loj.t"}, {"bjr", "bjr"}});
  EXPECT_EQ(r.rr(), Rational(200, 3));
  EXPECT_EQ(r.rr().format(2), "66.67");
  EXPECT_EQ(corpus_rr({{"bjr", "loj.t"}}).rr(), recognition_rate("bjr", "loj.t").rr());
  try {
    corpus_rr({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
}

TEST(CorpusRr, MacroAverageWeighsPairsEqually) {
  // Micro: (1 + 10) / 13; macro: (100/3 + 100) / 2.
  const std::vector<std::pair<std::string, std::string>> pairs = {{"bjr", "loj.t"},
                                                                  {"abcdefghij", "abcdefghij"}};
  EXPECT_EQ(corpus_rr(pairs).rr(), Rational(1100, 13));
  EXPECT_NEAR(corpus_rr_macro(pairs), (100.0 / 3.0 + 100.0) / 2.0, 1e-12);
}

}  // namespace
}  // namespace neography::rr
