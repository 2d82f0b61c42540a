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

#include "neography/skeleton.hpp"

#include <cmath>

#include "json.hpp"
#include "neography/error.hpp"
#include "neography/text.hpp"

namespace neography::skeleton {

namespace {

void require_open_unit(double p, const char* name) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("skeleton parameter ") + name + " must lie in (0,1)");
  }
}

}  // namespace

void SkeletonParams::validate() const {
  require_open_unit(p_pure, "p_pure");
  require_open_unit(p_begin, "p_begin");
  require_open_unit(p_end, "p_end");
  require_open_unit(p_both, "p_both");
  require_open_unit(p_keep_vowel, "p_keep_vowel");
  require_open_unit(p_continue, "p_continue");
  if (std::abs(p_begin + p_end + p_both - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument, "p_begin + p_end + p_both must equal 1");
  }
  for (char32_t v : vowels.members()) {
    if (consonants.contains(v)) {
      throw Error(ErrorCode::kInvalidArgument, "vowel and consonant classes overlap");
    }
  }
}

SkeletonParams SkeletonParams::from_json(std::string_view document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("skeleton params: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "skeleton params must be an object");
  SkeletonParams p;
  try {
    p.p_pure = j.value("p_pure", p.p_pure);
    p.p_begin = j.value("p_begin", p.p_begin);
    p.p_end = j.value("p_end", p.p_end);
    p.p_both = j.value("p_both", p.p_both);
    p.p_keep_vowel = j.value("p_keep_vowel", p.p_keep_vowel);
    p.p_continue = j.value("p_continue", p.p_continue);
    if (j.contains("vowels")) {
      p.vowels = CharClass("VOWELS", text::to_nfc_u32(j.at("vowels").get<std::string>()));
    }
    if (j.contains("consonants")) {
      p.consonants =
          CharClass("CONSONANTS", text::to_nfc_u32(j.at("consonants").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("skeleton params: ") + e.what());
  }
  p.validate();
  return p;
}

StochasticRegex skeleton_regex(const SkeletonParams& params) {
  params.validate();
  using R = StochasticRegex;
  const R vowel = R::char_class(params.vowels);
  const R consonant = R::char_class(params.consonants);
  const R body = R::concat(
      {consonant,
       R::repeat(R::alternation({{1.0 - params.p_keep_vowel, consonant},
                                 {params.p_keep_vowel, vowel}}),
                 params.p_continue)});
  const R framed = R::alternation({
      {params.p_begin, R::concat({vowel, body})},
      {params.p_end, R::concat({body, vowel})},
      {params.p_both, R::concat({vowel, body, vowel})},
  });
  return R::alternation({{params.p_pure, body}, {1.0 - params.p_pure, framed}});
}

WeightedAutomaton build_skeleton_automaton(const SkeletonParams& params) {
  return compile(skeleton_regex(params));
}

std::string skeletonize(std::string_view word) {
  const std::u32string w = text::to_nfc_u32(word);
  if (w.empty()) throw Error(ErrorCode::kEmptyWord, "cannot skeletonize an empty word");

  std::u32string out(1, w.front());
  for (std::size_t i = 1; i < w.size(); ++i) {
    const char32_t c = w[i];
    if (is_french_vowel(c)) continue;
    // Nasal after an interior vowel ("bonjour", "enfant"): the vowel is gone,
    // the nasal goes with it. The initial character is an anchor, not a
    // nasal-vowel context, so a second pass never removes more.
    const bool nasal = c == U'n' || c == U'm';
    if (nasal && i >= 2 && is_french_vowel(w[i - 1])) {
      const bool at_end = i + 1 == w.size();
      if (at_end || is_french_consonant(w[i + 1])) continue;
    }
    out.push_back(c);
  }
  return text::encode_utf8(out);
}

Lexicon build_skeleton_lexicon(const Lexicon& lexicon) {
  if (lexicon.empty()) throw Error(ErrorCode::kEmptyLexicon, "skeleton lexicon needs input words");
  Lexicon out;
  for (const auto& [word, entry] : lexicon.entries()) {
    out.add(skeletonize(word), entry.frequency, word);
  }
  return out;
}

}  // namespace neography::skeleton
