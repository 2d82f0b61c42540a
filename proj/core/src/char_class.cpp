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

#include "neography/char_class.hpp"

#include <algorithm>

#include "neography/error.hpp"

namespace neography {

namespace {

constexpr std::u32string_view kVowels = U"aeiouyéèêëàâîïôûùü";
constexpr std::u32string_view kConsonants = U"bcdfghjklmnpqrstvwxzç";

}  // namespace

CharClass::CharClass(std::string name, std::u32string_view members)
    : name_(std::move(name)), members_(members.begin(), members.end()) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "character class '" + name_ + "' is empty");
  }
}

bool CharClass::contains(char32_t c) const {
  return std::binary_search(members_.begin(), members_.end(), c);
}

const CharClass& CharClass::vowels() {
  static const CharClass kClass("VOWELS", kVowels);
  return kClass;
}

const CharClass& CharClass::consonants() {
  static const CharClass kClass("CONSONANTS", kConsonants);
  return kClass;
}

const CharClass& CharClass::letters() {
  static const CharClass kClass("LETTERS",
                                std::u32string(kVowels) + std::u32string(kConsonants));
  return kClass;
}

const CharClass& CharClass::digits() {
  static const CharClass kClass("DIGITS", U"0123456789");
  return kClass;
}

const CharClass& CharClass::symbols() {
  static const CharClass kClass("SYMBOLS", U"+-");
  return kClass;
}

const CharClass* CharClass::builtin(std::string_view name) {
  if (name == "VOWELS") return &vowels();
  if (name == "CONSONANTS") return &consonants();
  if (name == "LETTERS") return &letters();
  if (name == "DIGITS") return &digits();
  if (name == "SYMBOLS") return &symbols();
  return nullptr;
}

bool is_french_vowel(char32_t c) { return kVowels.find(c) != std::u32string_view::npos; }

bool is_french_consonant(char32_t c) {
  return kConsonants.find(c) != std::u32string_view::npos;
}

}  // namespace neography
