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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

namespace neography::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(std::string_view relative) { return testing::data_path(relative).string(); }

class TempDir {
 public:
  TempDir()
      : path_(std::filesystem::temp_directory_path() /
              (std::string("neography_cli_") +
               ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(std::string_view name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const std::string& path, const std::string& content) {
  std::ofstream(path, std::ios::binary) << content;
}

TEST(Cli, RrWorkedExample) {
  const auto r = invoke({"rr", "--label", "bjr", "--candidate", "loj.t"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "33.33\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, RrPairs) {
  TempDir dir;
  write(dir.file("pairs.tsv"), "# label\tcandidate\nbjr\tloj.t\nbjr\tbjr\n");
  const auto r = invoke({"rr", "--pairs", dir.file("pairs.tsv")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "bjr\tloj.t\t33.33\nbjr\tbjr\t100.00\noverall\t66.67\n");
  const auto macro = invoke({"rr", "--pairs", dir.file("pairs.tsv"), "--macro"});
  EXPECT_NE(macro.out.find("macro\t66.67\n"), std::string::npos);
  write(dir.file("bad.tsv"), "bjr\n");
  EXPECT_EQ(invoke({"rr", "--pairs", dir.file("bad.tsv")}).code, kExitData);
}

TEST(Cli, RrFoldCase) {
  EXPECT_EQ(invoke({"rr", "--label", "BJR", "--candidate", "bjr"}).out, "0.00\n");
  EXPECT_EQ(invoke({"rr", "--label", "BJR", "--candidate", "bjr", "--fold-case"}).out, "100.00\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"rr", "--label", "bjr"}).code, kExitUsage);
  EXPECT_EQ(invoke({"rr"}).code, kExitUsage);
  EXPECT_EQ(invoke({"rr", "--pairs", "x", "--label", "a", "--candidate", "b"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gen-lexicon", "--mode", "nope", "--input", "a", "--output", "b"}).code,
            kExitUsage);
  const auto r = invoke({"synth", "--lexicon", "x"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, DataErrors) {
  const auto r = invoke({"rr", "--label", "", "--candidate", "x"});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("EmptyLabel"), std::string::npos);
  EXPECT_EQ(invoke({"score", "--model", "/nonexistent/model.json", "--text", "a"}).code, kExitData);
}

TEST(Cli, Score) {
  TempDir dir;
  write(dir.file("lit.json"), R"({"lit": "a"})");
  EXPECT_EQ(invoke({"score", "--model", dir.file("lit.json"), "--text", "a"}).out, "0.000000\n");
  EXPECT_EQ(invoke({"score", "--model", dir.file("lit.json"), "--text", "b"}).out, "REJECT\n");
  write(dir.file("uniform.json"), R"({"type": "uniform", "alphabet": "abcdefghijklmnopqrstuvwxyz"})");
  EXPECT_EQ(invoke({"score", "--model", dir.file("uniform.json"), "--text", "ab"}).out,
            "6.516193\n");
  write(dir.file("none.json"), R"({"type": "none"})");
  EXPECT_EQ(invoke({"score", "--model", dir.file("none.json"), "--text", "ab"}).code, kExitData);
  const auto sk = invoke({"score", "--model", data("models/skeleton.json"), "--text", "bjr"});
  EXPECT_EQ(sk.code, kExitOk);
  EXPECT_NE(sk.out, "REJECT\n");
}

TEST(Cli, GenLexicon) {
  TempDir dir;
  write(dir.file("freq.tsv"), "musique\t100\nsalut\t50\nx\t1\n");
  const auto r = invoke({"gen-lexicon", "--mode", "phonetic", "--input", dir.file("freq.tsv"),
                         "--top-k", "1", "--rules", data("rules/french_default.json"),
                         "--output", dir.file("out.tsv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string out = slurp(dir.file("out.tsv"));
  EXPECT_NE(out.find("muzik\t100\tmusique\n"), std::string::npos);
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 8);

  const auto s = invoke({"gen-lexicon", "--mode", "skeleton", "--input", dir.file("freq.tsv"),
                         "--output", dir.file("sk.tsv")});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_EQ(slurp(dir.file("sk.tsv")), "msq\t100\tmusique\nslt\t50\tsalut\nx\t1\tx\n");

  EXPECT_EQ(invoke({"gen-lexicon", "--mode", "skeleton", "--input", dir.file("freq.tsv"),
                    "--top-k", "9", "--output", dir.file("sk.tsv")})
                .code,
            kExitData);
}

TEST(Cli, SynthAndSimulateAreDeterministic) {
  TempDir dir;
  const std::vector<std::string> synth = {
      "synth", "--lexicon", data("lexicon/fr_top2000.tsv"), "--rules",
      data("rules/french_default.json"), "--rebus-table", data("rebus/french.tsv"),
      "--counts", "10,10,10,10", "--seed", "11", "--out", dir.file("c.jsonl")};
  ASSERT_EQ(invoke(synth).code, kExitOk);
  const std::string corpus = slurp(dir.file("c.jsonl"));
  EXPECT_EQ(std::count(corpus.begin(), corpus.end(), '\n'), 40);

  auto simulate = [&](const std::string& csv) {
    return invoke({"simulate", "--corpus", dir.file("c.jsonl"), "--channel",
                   data("experiments/channel.json"), "--config", data("experiments/configs.json"),
                   "--out-csv", csv});
  };
  const auto first = simulate(dir.file("a.csv"));
  ASSERT_EQ(first.code, kExitOk) << first.err;
  const auto second = simulate(dir.file("b.csv"));
  EXPECT_EQ(slurp(dir.file("a.csv")), slurp(dir.file("b.csv")));
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(slurp(dir.file("a.csv")).rfind("config,category,n_messages,n_chars,rr_percent\n", 0), 0u);
  EXPECT_NE(first.out.find("skeleton"), std::string::npos);

  write(dir.file("dup.jsonl"),
        "{\"id\":\"a\",\"writer\":1,\"hand\":\"boxed\",\"source\":\"free\",\"label\":\"x\"}\n"
        "{\"id\":\"a\",\"writer\":1,\"hand\":\"boxed\",\"source\":\"free\",\"label\":\"y\"}\n");
  const auto dup = invoke({"simulate", "--corpus", dir.file("dup.jsonl"), "--channel",
                           data("experiments/channel.json"), "--config",
                           data("experiments/configs.json"), "--out-csv", dir.file("d.csv")});
  EXPECT_EQ(dup.code, kExitData);
  EXPECT_NE(dup.err.find("line 2"), std::string::npos);
}

TEST(Cli, Help) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("simulate"), std::string::npos);
}

}  // namespace
}  // namespace neography::cli
