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

#include "neography/corpus.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <unordered_set>

#include "json.hpp"
#include "neography/error.hpp"
#include "neography/skeleton.hpp"
#include "neography/text.hpp"

namespace neography::corpus {

using ojson = nlohmann::ordered_json;

namespace {

template <typename T>
T required(const nlohmann::json& j, const char* key, std::size_t line) {
  if (!j.contains(key)) {
    throw Error(ErrorCode::kParseError, std::string("missing field \"") + key + "\"", line);
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kParseError, std::string("bad type for \"") + key + "\"", line);
  }
}

template <typename E>
E enum_field(const nlohmann::json& j, const char* key, std::size_t line,
             std::optional<E> (*parse)(std::string_view)) {
  const auto name = required<std::string>(j, key, line);
  const auto value = parse(name);
  if (!value) {
    throw Error(ErrorCode::kParseError,
                std::string("unknown ") + key + " \"" + name + "\"", line);
  }
  return *value;
}

}  // namespace

std::vector<MessageRecord> parse_corpus(std::istream& in) {
  std::vector<MessageRecord> records;
  std::unordered_set<std::string> ids;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.find_first_not_of(" \t") == std::string::npos) continue;

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kParseError, e.what(), line_no);
    }
    if (!j.is_object()) throw Error(ErrorCode::kParseError, "expected a JSON object", line_no);

    MessageRecord r;
    r.id = required<std::string>(j, "id", line_no);
    r.writer = required<int>(j, "writer", line_no);
    r.hand = enum_field<Hand>(j, "hand", line_no, parse_hand);
    r.source = enum_field<Source>(j, "source", line_no, parse_source);
    try {
      r.label = text::nfc(required<std::string>(j, "label", line_no));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidUtf8) {
        throw Error(ErrorCode::kParseError, e.what(), line_no);
      }
      throw;
    }
    if (r.label.empty()) throw Error(ErrorCode::kEmptyLabel, "empty label", line_no);
    r.category = j.contains("category")
                     ? enum_field<Category>(j, "category", line_no, parse_category)
                     : Category::kOther;
    if (j.contains("standard")) r.standard = text::nfc(required<std::string>(j, "standard", line_no));
    if (!ids.insert(r.id).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate id \"" + r.id + "\"", line_no);
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<MessageRecord> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return parse_corpus(in);
}

std::string format_record(const MessageRecord& record) {
  ojson j;
  j["id"] = record.id;
  j["writer"] = record.writer;
  j["hand"] = to_string(record.hand);
  j["source"] = to_string(record.source);
  j["label"] = record.label;
  j["category"] = to_string(record.category);
  if (record.standard) j["standard"] = *record.standard;
  return j.dump();
}

void write_corpus(std::ostream& out, std::span<const MessageRecord> records) {
  for (const auto& r : records) out << format_record(r) << '\n';
}

void save_corpus(const std::filesystem::path& path, std::span<const MessageRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  write_corpus(out, records);
}

SynthCounts SynthCounts::parse(std::string_view text) {
  std::vector<std::size_t> values;
  while (true) {
    const auto comma = text.find(',');
    const auto part = text.substr(0, comma);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error(ErrorCode::kInvalidArgument, "counts must be four non-negative integers s,r,p,o");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (values.size() != 4) {
    throw Error(ErrorCode::kInvalidArgument, "counts must be four non-negative integers s,r,p,o");
  }
  return {values[0], values[1], values[2], values[3]};
}

namespace {

constexpr int kWriters = 150;
constexpr int kMaxDraws = 2000;

std::string pick(const std::vector<std::string>& options, std::mt19937_64& rng) {
  return options[rng() % options.size()];
}

}  // namespace

std::vector<MessageRecord> synth_corpus(const Lexicon& standard,
                                        const phonetic::RuleSet& rules,
                                        const rebus::RebusTable& table,
                                        const SynthCounts& counts, std::uint64_t seed) {
  if (standard.empty()) throw Error(ErrorCode::kEmptyLexicon, "standard lexicon is empty");
  std::vector<std::string> words;
  words.reserve(standard.size());
  for (const auto& [word, entry] : standard.entries()) words.push_back(word);

  std::mt19937_64 rng(seed);
  auto neography_ok = [&](const std::string& label, const std::string& word) {
    return label != word && !standard.contains(label);
  };
  // Variants of `word` usable as a label for `category`, sorted.
  auto variants = [&](Category category, const std::string& word) {
    std::vector<std::string> out;
    switch (category) {
      case Category::kSkeleton: {
        const std::string s = skeleton::skeletonize(word);
        if (neography_ok(s, word)) out.push_back(s);
        break;
      }
      case Category::kPhonetic:
        for (const auto& v : phonetic::closure(word, rules).words) {
          if (neography_ok(v, word)) out.push_back(v);
        }
        break;
      case Category::kRebus:
        for (const auto& v : rebus::rebusify(word, table)) {
          if (neography_ok(v, word)) out.push_back(v);
        }
        break;
      case Category::kOther:
        out.push_back(word);
        break;
    }
    return out;
  };

  std::vector<MessageRecord> records;
  records.reserve(counts.total());
  const std::pair<Category, std::size_t> plan[] = {{Category::kSkeleton, counts.skeleton},
                                                   {Category::kRebus, counts.rebus},
                                                   {Category::kPhonetic, counts.phonetic},
                                                   {Category::kOther, counts.other}};
  for (const auto& [category, count] : plan) {
    for (std::size_t k = 0; k < count; ++k) {
      std::optional<std::pair<std::string, std::string>> chosen;
      for (int draw = 0; draw < kMaxDraws && !chosen; ++draw) {
        const std::string& word = words[rng() % words.size()];
        const auto options = variants(category, word);
        if (!options.empty()) chosen.emplace(pick(options, rng), word);
      }
      if (!chosen) {
        throw Error(ErrorCode::kInvalidArgument,
                    "lexicon yields no " + std::string(to_string(category)) + " labels");
      }
      MessageRecord r;
      const std::size_t index = records.size();
      std::string id = std::to_string(index + 1);
      r.id = "syn-" + std::string(id.size() < 5 ? 5 - id.size() : 0, '0') + id;
      r.writer = static_cast<int>(index % kWriters) + 1;
      r.hand = Hand::kBoxed;
      r.source = Source::kFree;
      r.label = chosen->first;
      r.category = category;
      r.standard = chosen->second;
      records.push_back(std::move(r));
    }
  }
  return records;
}

}  // namespace neography::corpus
