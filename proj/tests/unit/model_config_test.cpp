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

#include "neography/corpus.hpp"
#include "neography/error.hpp"
#include "neography/model_config.hpp"
#include "test_support.hpp"

namespace neography::config {
namespace {

ModelContext data_context() { return {testing::data_dir() / "experiments", {}}; }

TEST(ModelConfig, NoneIsNull) { EXPECT_EQ(parse_model(R"({"type": "none"})", {}), nullptr); }

TEST(ModelConfig, BareRegex) {
  const auto m = parse_model(R"({"union": [{"p": 0.5, "node": {"lit": "a"}},
                                           {"p": 0.5, "node": {"lit": "b"}}]})", {});
  EXPECT_NEAR(*m->score("a"), std::log(2.0), 1e-12);
  const auto wrapped = parse_model(R"({"type": "regex", "regex": {"lit": "ab"}})", {});
  EXPECT_EQ(wrapped->score("ab"), 0.0);
}

TEST(ModelConfig, UniformAndLexicon) {
  const auto u = parse_model(R"({"type": "uniform", "alphabet": "ab"})", {});
  EXPECT_NEAR(*u->score("ab"), 2.0 * std::log(2.0), 1e-12);
  const auto l = parse_model(R"({"type": "lexicon", "words": ["bjr", "slt"]})", {});
  EXPECT_NEAR(*l->score("slt"), std::log(2.0), 1e-12);
  const auto file = parse_model(R"({"type": "lexicon", "path": "../lexicon/fr_top2000.tsv",
                                    "top_k": 10})", data_context());
  EXPECT_TRUE(file->score("de").has_value());
  EXPECT_EQ(file->score("musique"), std::nullopt);
}

TEST(ModelConfig, PhenomenonModels) {
  const auto sk = parse_model(R"({"type": "skeleton", "params": {"p_keep_vowel": 0.2}})", {});
  EXPECT_TRUE(sk->score("bjr").has_value());
  EXPECT_EQ(sk->score("aeiou"), std::nullopt);
  const auto rb = parse_model(R"({"type": "rebus"})", {});
  EXPECT_TRUE(rb->score("l8er").has_value());
  EXPECT_EQ(rb->score("48"), std::nullopt);
  const auto sl = parse_model(R"({"type": "skeleton-lexicon", "path": "../lexicon/fr_top2000.tsv",
                                  "top_k": 100})", data_context());
  EXPECT_TRUE(sl->score("pr").has_value());
  EXPECT_EQ(sl->score("pour"), std::nullopt);
  const auto hl = parse_model(R"({"type": "homophone-lexicon", "path": "../lexicon/fr_top2000.tsv",
                                  "top_k": 500, "rules": "../rules/french_default.json"})",
                              data_context());
  EXPECT_TRUE(hl->score("kom").has_value());
}

TEST(ModelConfig, NGram) {
  const auto m = parse_model(R"({"type": "ngram", "order": 2, "k": 1, "strings": ["aa"], "alphabet": "a"})", {});
  EXPECT_NEAR(*m->score("aa"), -std::log(2.0 / 3.0 * 0.5 * 0.5), 1e-12);
}

TEST(ModelConfig, Interpolation) {
  const auto m = parse_model(R"({"type": "interpolate", "components": [
      {"weight": 0.5, "model": {"lit": "a"}},
      {"weight": 0.5, "model": {"lit": "b"}}]})", {});
  EXPECT_NEAR(*m->score("a"), std::log(2.0), 1e-12);
  try {
    parse_model(R"({"type": "interpolate", "components": [
        {"weight": 0.5, "model": {"lit": "a"}}, {"weight": 0.4, "model": {"lit": "b"}}]})", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadWeights);
  }
}

TEST(ModelConfig, OptimalLexiconNeedsACorpus) {
  EXPECT_THROW(parse_model(R"({"type": "optimal-lexicon"})", {}), Error);
  MessageRecord r;
  r.id = "a";
  r.label = "bjr";
  const std::vector<MessageRecord> corpus{r};
  const auto m = parse_model(R"({"type": "optimal-lexicon"})", {".", corpus});
  EXPECT_EQ(m->score("bjr"), 0.0);
}

TEST(ModelConfig, SchemaErrors) {
  for (const char* doc : {"{", R"({"type": "magic"})", R"({"type": "lexicon"})",
                          R"({"type": "interpolate"})", R"({"type": "regex"})", "3"}) {
    try {
      parse_model(doc, {});
      ADD_FAILURE() << doc;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << doc;
    }
  }
  EXPECT_THROW(parse_model(R"({"type": "lexicon", "path": "missing.tsv"})", {}), Error);
}

TEST(Experiment, ShippedConfigsLoad) {
  const Lexicon lex;
  MessageRecord r;
  r.id = "a";
  r.label = "bjr";
  const std::vector<MessageRecord> corpus{r};
  const auto ex = load_experiment(testing::data_path("experiments/configs.json"), corpus);
  EXPECT_EQ(ex.n_best, 10u);
  ASSERT_GE(ex.configs.size(), 4u);
  EXPECT_EQ(ex.configs.front().name, "no-lm");
  EXPECT_EQ(ex.configs.front().lm, nullptr);
  for (const auto& c : ex.configs) {
    if (c.name != "no-lm") {
      EXPECT_NE(c.lm, nullptr) << c.name;
    }
  }
}

TEST(Experiment, Errors) {
  EXPECT_THROW(parse_experiment(R"({"configs": []})", {}), Error);
  EXPECT_THROW(parse_experiment(R"({"configs": [{"lambda": 0.5}]})", {}), Error);
  const auto ex = parse_experiment(R"({"n_best": 3, "configs": [{"name": "x"}]})", {});
  EXPECT_EQ(ex.n_best, 3u);
  EXPECT_DOUBLE_EQ(ex.configs[0].lambda, 0.5);
}

}  // namespace
}  // namespace neography::config
