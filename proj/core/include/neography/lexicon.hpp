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

#ifndef NEOGRAPHY_LEXICON_HPP_
#define NEOGRAPHY_LEXICON_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace neography {

// Word set with optional frequencies (0 = unweighted) and, for generated
// lexicons, the source words each entry was derived from. Words are stored
// NFC-normalized; iteration order is lexicographic by UTF-8 bytes.
class Lexicon {
 public:
  struct Entry {
    std::uint64_t frequency = 0;
    std::set<std::string> sources;
  };

  // Adds `frequency` to the word's count (creating it if needed). Throws
  // Error(kInvalidArgument) on an empty word.
  void add(std::string_view word, std::uint64_t frequency = 0,
           std::string_view source = {});

  bool contains(std::string_view word) const;
  std::uint64_t frequency(std::string_view word) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::map<std::string, Entry>& entries() const noexcept { return entries_; }

  // The k most frequent words, ties broken lexicographically.
  std::vector<std::string> top_k(std::size_t k) const;

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  std::map<std::string, Entry> entries_;
};

// "word<TAB>count[<TAB>source,source...]" lines. Blank lines and lines
// starting with '#' are skipped; a bare word means count 0. Throws
// Error(kParseError) with the line number on negative or malformed counts.
Lexicon parse_frequency_list(std::istream& in);
Lexicon load_frequency_list(const std::filesystem::path& path);
void write_frequency_list(std::ostream& out, const Lexicon& lexicon);

}  // namespace neography

#endif  // NEOGRAPHY_LEXICON_HPP_
