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

#ifndef NEOGRAPHY_CORPUS_HPP_
#define NEOGRAPHY_CORPUS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neography/lexicon.hpp"
#include "neography/message_record.hpp"
#include "neography/phonetic.hpp"
#include "neography/rebus.hpp"

namespace neography::corpus {

// JSON Lines, one MessageRecord per line:
//   {"id":"m1","writer":3,"hand":"boxed","source":"free","label":"a2m1",
//    "category":"rebus"}
// "category" defaults to "other"; "standard" is optional. Blank lines are
// skipped. Labels are NFC-normalized. Throws Error(kParseError),
// Error(kDuplicateId) or Error(kEmptyLabel), each with the line number.
std::vector<MessageRecord> parse_corpus(std::istream& in);
std::vector<MessageRecord> load_corpus(const std::filesystem::path& path);

// Canonical form: fixed key order, compact separators, UTF-8 unescaped.
std::string format_record(const MessageRecord& record);
void write_corpus(std::ostream& out, std::span<const MessageRecord> records);
void save_corpus(const std::filesystem::path& path, std::span<const MessageRecord> records);

struct SynthCounts {
  std::size_t skeleton = 0;
  std::size_t rebus = 0;
  std::size_t phonetic = 0;
  std::size_t other = 0;

  // "s,r,p,o". Throws Error(kInvalidArgument).
  static SynthCounts parse(std::string_view text);
  std::size_t total() const noexcept { return skeleton + rebus + phonetic + other; }
};

// Samples standard words uniformly (seeded) and respells them per category:
// skeletonize, a sampled closure variant, a sampled rebus form, or the word
// itself for "other". Neography labels are never the source word and never
// a standard lexicon entry. Records are boxed/free with writers assigned
// round-robin over 150 writers; each keeps its standard form.
// Throws Error(kEmptyLexicon), or Error(kInvalidArgument) when no word in
// the lexicon yields a label for a requested category.
std::vector<MessageRecord> synth_corpus(const Lexicon& standard,
                                        const phonetic::RuleSet& rules,
                                        const rebus::RebusTable& table,
                                        const SynthCounts& counts, std::uint64_t seed);

}  // namespace neography::corpus

#endif  // NEOGRAPHY_CORPUS_HPP_
