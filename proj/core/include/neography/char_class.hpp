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

#ifndef NEOGRAPHY_CHAR_CLASS_HPP_
#define NEOGRAPHY_CHAR_CLASS_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace neography {

// A named, non-empty set of characters. Members are kept sorted and unique.
class CharClass {
 public:
  // Throws Error(kInvalidArgument) if `members` is empty.
  CharClass(std::string name, std::u32string_view members);

  const std::string& name() const noexcept { return name_; }
  const std::vector<char32_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(char32_t c) const;

  // Built-in French classes. VOWELS and CONSONANTS partition the lowercase
  // French alphabet.
  static const CharClass& vowels();
  static const CharClass& consonants();
  static const CharClass& letters();
  static const CharClass& digits();
  static const CharClass& symbols();

  // Looks up a built-in class by name ("VOWELS", "CONSONANTS", "LETTERS",
  // "DIGITS", "SYMBOLS"); returns nullptr for unknown names.
  static const CharClass* builtin(std::string_view name);

  friend bool operator==(const CharClass&, const CharClass&) = default;

 private:
  std::string name_;
  std::vector<char32_t> members_;
};

bool is_french_vowel(char32_t c);
bool is_french_consonant(char32_t c);

}  // namespace neography

#endif  // NEOGRAPHY_CHAR_CLASS_HPP_
