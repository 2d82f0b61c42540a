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

#include "neography/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "neography/error.hpp"
#include "neography/text.hpp"

namespace neography {

void Lexicon::add(std::string_view word, std::uint64_t frequency,
                  std::string_view source) {
  if (word.empty()) throw Error(ErrorCode::kInvalidArgument, "empty lexicon word");
  Entry& e = entries_[text::nfc(word)];
  e.frequency += frequency;
  if (!source.empty()) e.sources.insert(text::nfc(source));
}

bool Lexicon::contains(std::string_view word) const {
  return entries_.find(text::nfc(word)) != entries_.end();
}

std::uint64_t Lexicon::frequency(std::string_view word) const {
  const auto it = entries_.find(text::nfc(word));
  return it == entries_.end() ? 0 : it->second.frequency;
}

std::vector<std::string> Lexicon::top_k(std::size_t k) const {
  std::vector<const std::pair<const std::string, Entry>*> order;
  order.reserve(entries_.size());
  for (const auto& kv : entries_) order.push_back(&kv);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return a->second.frequency > b->second.frequency;
  });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::min(k, order.size()); ++i) out.push_back(order[i]->first);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

}  // namespace

Lexicon parse_frequency_list(std::istream& in) {
  Lexicon lex;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    const std::string_view word = trim(line.substr(0, tab));
    if (word.empty()) throw Error(ErrorCode::kParseError, "empty word", line_no);
    std::uint64_t count = 0;
    std::string_view sources;
    if (tab != std::string_view::npos) {
      std::string_view rest = line.substr(tab + 1);
      const auto tab2 = rest.find('\t');
      const std::string_view count_text = trim(rest.substr(0, tab2));
      if (tab2 != std::string_view::npos) sources = rest.substr(tab2 + 1);
      if (!count_text.empty() && count_text.front() == '-') {
        throw Error(ErrorCode::kParseError, "negative count for '" + std::string(word) + "'",
                    line_no);
      }
      const auto* end = count_text.data() + count_text.size();
      const auto [ptr, ec] = std::from_chars(count_text.data(), end, count);
      if (ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::kParseError, "bad count '" + std::string(count_text) + "'",
                    line_no);
      }
    }
    try {
      lex.add(word, count);
      while (!sources.empty()) {
        const auto comma = sources.find(',');
        const auto src = trim(sources.substr(0, comma));
        if (!src.empty()) lex.add(word, 0, src);
        if (comma == std::string_view::npos) break;
        sources.remove_prefix(comma + 1);
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, e.what(), line_no);
    }
  }
  return lex;
}

Lexicon load_frequency_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return parse_frequency_list(in);
}

void write_frequency_list(std::ostream& out, const Lexicon& lexicon) {
  for (const auto& [word, entry] : lexicon.entries()) {
    out << word << '\t' << entry.frequency;
    if (!entry.sources.empty()) {
      out << '\t';
      bool first = true;
      for (const auto& s : entry.sources) {
        if (!first) out << ',';
        out << s;
        first = false;
      }
    }
    out << '\n';
  }
}

}  // namespace neography
