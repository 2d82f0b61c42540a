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


#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "neography/lexicon.hpp"
#include "neography/phonetic.hpp"
#include "neography/rebus.hpp"
#include "neography/recognition.hpp"
#include "neography/rr_metric.hpp"
#include "neography/skeleton.hpp"

namespace {

using namespace neography;

std::string random_word(std::mt19937_64& rng, std::size_t n) {
  static constexpr char kAlphabet[] = "abcdefghijklmnopqrstuvwxyz";
  std::uniform_int_distribution<int> pick(0, 25);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += kAlphabet[pick(rng)];
  return s;
}

void BM_AsymDistance(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::string label = random_word(rng, n);
  const std::string candidate = random_word(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(rr::asym_distance(label, candidate));
}
BENCHMARK(BM_AsymDistance)->Arg(8)->Arg(32)->Arg(128);

void BM_SkeletonScore(benchmark::State& state) {
  const auto automaton = skeleton::build_skeleton_automaton();
  for (auto _ : state) benchmark::DoNotOptimize(automaton.score("bjr"));
}
BENCHMARK(BM_SkeletonScore);

void BM_RebusScore(benchmark::State& state) {
  const auto automaton = rebus::build_rebus_automaton();
  for (auto _ : state) benchmark::DoNotOptimize(automaton.score("a2m1"));
}
BENCHMARK(BM_RebusScore);

void BM_Closure(benchmark::State& state) {
  const auto rules = phonetic::RuleSet::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(phonetic::closure("musique", rules));
}
BENCHMARK(BM_Closure);

void BM_Corrupt(benchmark::State& state) {
  const sim::ConfusionModel channel;
  for (auto _ : state) benchmark::DoNotOptimize(sim::corrupt("aujourd'hui", channel, 10));
}
BENCHMARK(BM_Corrupt);

void BM_Skeletonize(benchmark::State& state) {
  const Lexicon lexicon =
      load_frequency_list(std::string(NEOGRAPHY_BENCH_DATA_DIR) + "/lexicon/fr_top2000.tsv");
  for (auto _ : state) {
    for (const auto& [word, entry] : lexicon.entries()) {
      benchmark::DoNotOptimize(skeleton::skeletonize(word));
    }
  }
}
BENCHMARK(BM_Skeletonize);

}  // namespace

BENCHMARK_MAIN();
