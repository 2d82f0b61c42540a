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

#include <sstream>

#include "neography/corpus.hpp"
#include "neography/error.hpp"
#include "neography/lexicon.hpp"
#include "neography/phonetic.hpp"
#include "neography/rebus.hpp"
#include "neography/skeleton.hpp"
#include "test_support.hpp"

namespace neography::corpus {
namespace {

std::vector<MessageRecord> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in);
}

void expect_error(const std::string& text, ErrorCode code, std::size_t line) {
  try {
    parse(text);
    ADD_FAILURE() << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << text;
    EXPECT_EQ(e.line(), line) << text;
  }
}

TEST(Corpus, ParsesOneRecord) {
  const auto records = parse(
      R"({"id":"m1","writer":3,"hand":"boxed","source":"free","label":"a2m1","category":"rebus"})"
      "\n");
  ASSERT_EQ(records.size(), 1u);
  const auto& r = records[0];
  EXPECT_EQ(r.id, "m1");
  EXPECT_EQ(r.writer, 3);
  EXPECT_EQ(r.hand, Hand::kBoxed);
  EXPECT_EQ(r.source, Source::kFree);
  EXPECT_EQ(r.label, "a2m1");
  EXPECT_EQ(r.category, Category::kRebus);
  EXPECT_FALSE(r.standard);
}

TEST(Corpus, EmptyInputIsAnEmptyCorpus) {
  EXPECT_TRUE(parse("").empty());
  EXPECT_TRUE(parse("\n  \n").empty());
}

TEST(Corpus, CategoryDefaultsToOther) {
  const auto records =
      parse(R"({"id":"x","writer":1,"hand":"cursive","source":"given","label":"salut"})");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].category, Category::kOther);
  EXPECT_EQ(records[0].hand, Hand::kCursive);
  EXPECT_EQ(records[0].source, Source::kGiven);
}

TEST(Corpus, LabelsAreNormalized) {
  const auto records =
      parse("{\"id\":\"x\",\"writer\":1,\"hand\":\"boxed\",\"source\":\"free\",\"label\":\"e\xCC\x81t\xC3\xA9\"}");
  EXPECT_EQ(records[0].label, "été");
}

TEST(Corpus, Errors) {
  const std::string ok = R"({"id":"m1","writer":3,"hand":"boxed","source":"free","label":"bjr"})";
  expect_error(ok + "\n" + ok + "\n", ErrorCode::kDuplicateId, 2);
  expect_error(ok + "\n{not json\n", ErrorCode::kParseError, 2);
  expect_error(R"({"id":"m1","writer":3,"hand":"boxed","source":"free","label":""})",
               ErrorCode::kEmptyLabel, 1);
  expect_error(R"({"id":"m1","writer":3,"hand":"inked","source":"free","label":"a"})",
               ErrorCode::kParseError, 1);
  expect_error(R"({"id":"m1","hand":"boxed","source":"free","label":"a"})",
               ErrorCode::kParseError, 1);
  expect_error(R"({"id":"m1","writer":"3","hand":"boxed","source":"free","label":"a"})",
               ErrorCode::kParseError, 1);
  expect_error(R"({"id":"m1","writer":3,"hand":"boxed","source":"free","label":"a","category":"emoji"})",
               ErrorCode::kParseError, 1);
  expect_error("[1,2]", ErrorCode::kParseError, 1);
}

TEST(Corpus, CanonicalRoundTripIsByteIdentical) {
  const std::string canonical =
      R"({"id":"m1","writer":3,"hand":"boxed","source":"free","label":"a2m1","category":"rebus"})"
      "\n"
      R"({"id":"m2","writer":4,"hand":"cursive","source":"given","label":"muzik","category":"phonetic","standard":"musique"})"
      "\n"
      R"({"id":"m3","writer":5,"hand":"boxed","source":"free","label":"été","category":"other"})"
      "\n";
  std::ostringstream out;
  write_corpus(out, parse(canonical));
  EXPECT_EQ(out.str(), canonical);
}

TEST(Corpus, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "neography_corpus_test.jsonl";
  const auto records = parse(
      R"({"id":"m1","writer":3,"hand":"boxed","source":"free","label":"bjr","category":"skeleton"})");
  save_corpus(path, records);
  EXPECT_EQ(load_corpus(path), records);
  std::filesystem::remove(path);
  EXPECT_THROW(load_corpus(path), Error);
}

TEST(SynthCounts, Parse) {
  const auto c = SynthCounts::parse("1,2,3,4");
  EXPECT_EQ(c.skeleton, 1u);
  EXPECT_EQ(c.other, 4u);
  EXPECT_EQ(c.total(), 10u);
  for (const char* bad : {"", "1,2,3", "1,2,3,4,5", "1,-2,3,4", "a,b,c,d", "1,,3,4", "1,2,3,4,"}) {
    EXPECT_THROW(SynthCounts::parse(bad), Error) << bad;
  }
}

TEST(Synth, SkeletonOfText) {
  Lexicon lex;
  lex.add("text");
  const auto records = synth_corpus(lex, phonetic::RuleSet::defaults(),
                                    rebus::RebusTable::defaults(), {1, 0, 0, 0}, 7);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].label, "txt");
  EXPECT_EQ(records[0].category, Category::kSkeleton);
  EXPECT_EQ(records[0].standard, "text");
}

TEST(Synth, ZeroCountsGiveAnEmptyCorpus) {
  Lexicon lex;
  lex.add("text");
  EXPECT_TRUE(synth_corpus(lex, phonetic::RuleSet::defaults(), rebus::RebusTable::defaults(),
                           {0, 0, 0, 0}, 1)
                  .empty());
  EXPECT_THROW(synth_corpus(Lexicon{}, phonetic::RuleSet::defaults(),
                            rebus::RebusTable::defaults(), {1, 0, 0, 0}, 1),
               Error);
}

TEST(Synth, DeterministicAndWellFormed) {
  const Lexicon lex = load_frequency_list(testing::data_path("lexicon/fr_top2000.tsv"));
  const auto rules = phonetic::RuleSet::defaults();
  const auto table = rebus::RebusTable::defaults();
  const SynthCounts counts{30, 30, 30, 30};
  const auto a = synth_corpus(lex, rules, table, counts, 42);
  const auto b = synth_corpus(lex, rules, table, counts, 42);
  const auto c = synth_corpus(lex, rules, table, counts, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  ASSERT_EQ(a.size(), counts.total());

  std::map<Category, std::size_t> per_category;
  std::set<std::string> ids;
  for (const auto& r : a) {
    ++per_category[r.category];
    EXPECT_TRUE(ids.insert(r.id).second);
    ASSERT_TRUE(r.standard.has_value());
    EXPECT_TRUE(lex.contains(*r.standard));
    switch (r.category) {
      case Category::kOther:
        EXPECT_EQ(r.label, *r.standard);
        break;
      case Category::kSkeleton:
        EXPECT_EQ(r.label, skeleton::skeletonize(*r.standard));
        [[fallthrough]];
      case Category::kRebus:
      case Category::kPhonetic:
        EXPECT_NE(r.label, *r.standard);
        EXPECT_FALSE(lex.contains(r.label)) << r.label;
        break;
    }
    if (r.category == Category::kPhonetic) {
      EXPECT_TRUE(phonetic::closure(*r.standard, rules).words.count(r.label)) << r.label;
    }
    if (r.category == Category::kRebus) {
      EXPECT_TRUE(rebus::rebusify(*r.standard, table).count(r.label)) << r.label;
    }
  }
  for (Category cat : kAllCategories) EXPECT_EQ(per_category[cat], 30u);

  std::ostringstream out;
  write_corpus(out, a);
  std::istringstream in(out.str());
  EXPECT_EQ(parse_corpus(in), a);
}

}  // namespace
}  // namespace neography::corpus
