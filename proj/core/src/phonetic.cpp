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

#include "neography/phonetic.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "neography/char_class.hpp"
#include "neography/error.hpp"
#include "neography/text.hpp"

namespace neography::phonetic {

void RewriteRule::validate() const {
  if (pattern.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "rule '" + name + "' has an empty pattern");
  }
  if (replacement.size() > pattern.size()) {
    throw Error(ErrorCode::kInvalidArgument, "rule '" + name + "' lengthens words");
  }
}

bool RewriteRule::matches_at(std::u32string_view word, std::size_t pos) const {
  if (word.substr(pos, pattern.size()) != pattern) return false;
  const std::size_t after = pos + pattern.size();
  const bool at_end = after == word.size();
  if (context.position == Position::kWordFinal && !at_end) return false;

  if (pos > 0) {
    const char32_t before = word[pos - 1];
    if (context.forbid_preceding.find(before) != std::u32string::npos) return false;
    if (context.require_preceding == Preceding::kVowel && !is_french_vowel(before)) return false;
  } else if (context.require_preceding == Preceding::kVowel) {
    return false;
  }

  switch (context.require_following) {
    case Following::kNone:
      break;
    case Following::kVowel:
      if (at_end || !is_french_vowel(word[after])) return false;
      break;
    case Following::kEndOrConsonant:
      if (!at_end && !is_french_consonant(word[after])) return false;
      break;
  }
  if (!at_end && context.forbid_following.find(word[after]) != std::u32string::npos) {
    return false;
  }
  return true;
}

void RuleSet::validate() const {
  if (rules.empty()) throw Error(ErrorCode::kInvalidArgument, "rule set is empty");
  if (max_depth == 0 || max_set_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "closure limits must be positive");
  }
  for (const auto& r : rules) r.validate();
}

namespace {

RewriteRule make_rule(std::string name, std::u32string_view pattern,
                      std::u32string_view replacement, RuleContext context = {}) {
  return {std::move(name), std::u32string(pattern), std::u32string(replacement),
          std::move(context)};
}

}  // namespace

RuleSet RuleSet::defaults() {
  RuleSet set;
  auto& r = set.rules;

  // Mute e: word-final, or right after a vowel.
  r.push_back(make_rule("mute-e-final", U"e", U"", {.position = Position::kWordFinal}));
  r.push_back(make_rule("mute-e-after-vowel", U"e", U"",
                        {.require_preceding = Preceding::kVowel}));
  // Mute final consonants, typically the plural s.
  for (char32_t c : std::u32string_view(U"stdxp")) {
    r.push_back(make_rule("mute-final-consonant", std::u32string(1, c), U"",
                          {.position = Position::kWordFinal}));
  }
  // Double consonants.
  for (char32_t c : CharClass::consonants().members()) {
    r.push_back(make_rule("double-consonant", std::u32string(2, c), std::u32string(1, c)));
  }
  // h is mute unless it is part of ch, ph, sh.
  r.push_back(make_rule("h-drop", U"h", U"", {.forbid_preceding = U"cps"}));
  r.push_back(make_rule("au-to-o", U"au", U"o"));
  r.push_back(make_rule("qu-to-k", U"qu", U"k"));
  // Hard c only: not before e/i/y (soft c) nor in ch.
  r.push_back(make_rule("hard-c-to-k", U"c", U"k", {.forbid_following = U"eiyéèêëîïh"}));
  r.push_back(make_rule("cedilla", U"ç", U"c"));
  // ai, ais, ait, è all collapse onto é.
  r.push_back(make_rule("ai-to-e-acute", U"ai", U"é"));
  r.push_back(make_rule("ai-to-e-acute", U"ais", U"é"));
  r.push_back(make_rule("ai-to-e-acute", U"ait", U"é"));
  r.push_back(make_rule("ai-to-e-acute", U"è", U"é"));
  // Intervocalic s sounds like z ("musique" -> "muzique").
  r.push_back(make_rule("intervocalic-s", U"s", U"z",
                        {.require_preceding = Preceding::kVowel,
                         .require_following = Following::kVowel}));
  return set;
}

namespace {

[[noreturn]] void rules_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, "rule set: " + what);
}

template <typename Enum>
Enum parse_enum(const nlohmann::json& rule, const char* field, Enum fallback,
                std::initializer_list<std::pair<const char*, Enum>> names) {
  if (!rule.contains(field)) return fallback;
  const auto value = rule.at(field).get<std::string>();
  for (const auto& [name, e] : names) {
    if (value == name) return e;
  }
  rules_error(std::string("unknown ") + field + " '" + value + "'");
}

}  // namespace

RuleSet RuleSet::from_json(std::string_view document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    rules_error(e.what());
  }
  RuleSet set;
  try {
    set.max_depth = j.value("max_depth", set.max_depth);
    set.max_set_size = j.value("max_set_size", set.max_set_size);
    if (!j.contains("rules") || !j.at("rules").is_array()) rules_error("missing \"rules\" array");
    for (const auto& rule : j.at("rules")) {
      RuleContext ctx;
      ctx.position = parse_enum(rule, "position", Position::kAnywhere,
                                {{"anywhere", Position::kAnywhere},
                                 {"word-final", Position::kWordFinal}});
      ctx.require_preceding = parse_enum(rule, "require_preceding", Preceding::kNone,
                                         {{"none", Preceding::kNone},
                                          {"vowel", Preceding::kVowel}});
      ctx.require_following = parse_enum(rule, "require_following", Following::kNone,
                                         {{"none", Following::kNone},
                                          {"vowel", Following::kVowel},
                                          {"end-or-consonant", Following::kEndOrConsonant}});
      ctx.forbid_preceding = text::to_nfc_u32(rule.value("forbid_preceding", std::string()));
      ctx.forbid_following = text::to_nfc_u32(rule.value("forbid_following", std::string()));
      const std::string name = rule.value("name", std::string("unnamed"));
      const std::u32string replacement =
          text::to_nfc_u32(rule.value("replacement", std::string()));
      std::vector<std::string> patterns;
      if (rule.contains("patterns")) {
        patterns = rule.at("patterns").get<std::vector<std::string>>();
      } else if (rule.contains("pattern")) {
        patterns.push_back(rule.at("pattern").get<std::string>());
      } else {
        rules_error("rule '" + name + "' has no pattern");
      }
      for (const auto& p : patterns) {
        set.rules.push_back(make_rule(name, text::to_nfc_u32(p), replacement, ctx));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    rules_error(e.what());
  }
  set.validate();
  return set;
}

RuleSet RuleSet::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

namespace {

void rewrite_all(const std::u32string& word, const RewriteRule& rule,
                 std::set<std::u32string>& out) {
  if (rule.pattern.size() > word.size()) return;
  for (std::size_t pos = 0; pos + rule.pattern.size() <= word.size(); ++pos) {
    if (!rule.matches_at(word, pos)) continue;
    std::u32string rewritten = word.substr(0, pos);
    rewritten += rule.replacement;
    rewritten += word.substr(pos + rule.pattern.size());
    if (!rewritten.empty()) out.insert(std::move(rewritten));
  }
}

std::set<std::string> to_utf8_set(const std::set<std::u32string>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(text::encode_utf8(w));
  return out;
}

}  // namespace

std::set<std::string> apply_rule(std::string_view word, const RewriteRule& rule) {
  std::set<std::u32string> out;
  rewrite_all(text::to_nfc_u32(word), rule, out);
  return to_utf8_set(out);
}

ClosureResult closure(std::string_view word, const RuleSet& rules) {
  const std::u32string seed = text::to_nfc_u32(word);
  if (seed.empty()) throw Error(ErrorCode::kEmptyWord, "closure of an empty word");
  rules.validate();

  ClosureResult result;
  std::set<std::u32string> seen{seed};
  std::set<std::u32string> frontier{seed};
  auto expand = [&](const std::set<std::u32string>& from) {
    std::set<std::u32string> produced;
    for (const auto& w : from) {
      for (const auto& rule : rules.rules) rewrite_all(w, rule, produced);
    }
    std::set<std::u32string> fresh;
    for (auto& w : produced) {
      if (!seen.count(w)) fresh.insert(w);
    }
    return fresh;
  };

  while (!frontier.empty()) {
    std::set<std::u32string> fresh = expand(frontier);
    if (fresh.empty()) break;
    if (result.depth == rules.max_depth) {
      result.limit_exceeded = true;
      break;
    }
    ++result.depth;
    frontier.clear();
    for (const auto& w : fresh) {
      if (seen.size() == rules.max_set_size) {
        result.limit_exceeded = true;
        break;
      }
      seen.insert(w);
      frontier.insert(w);
    }
    if (result.limit_exceeded) break;
  }
  result.words = to_utf8_set(seen);
  return result;
}

HomophoneLexicon build_homophone_lexicon(const Lexicon& frequencies, std::size_t top_k,
                                         const RuleSet& rules) {
  if (frequencies.size() < top_k) {
    throw Error(ErrorCode::kInsufficientLexicon,
                "frequency list has " + std::to_string(frequencies.size()) +
                    " entries, need " + std::to_string(top_k));
  }
  rules.validate();
  HomophoneLexicon out;
  for (const auto& word : frequencies.top_k(top_k)) {
    const ClosureResult c = closure(word, rules);
    if (c.limit_exceeded) out.truncated.push_back(word);
    const std::uint64_t f = frequencies.frequency(word);
    for (const auto& variant : c.words) out.lexicon.add(variant, f, word);
  }
  return out;
}

}  // namespace neography::phonetic
