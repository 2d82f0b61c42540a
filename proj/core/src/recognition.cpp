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

#include "neography/recognition.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"
#include "neography/char_class.hpp"
#include "neography/error.hpp"
#include "neography/text.hpp"

namespace neography::sim {

std::u32string ConfusionModel::default_alphabet() {
  std::u32string out(CharClass::letters().members().begin(),
                     CharClass::letters().members().end());
  out.append(CharClass::digits().members().begin(), CharClass::digits().members().end());
  return out;
}

std::map<char32_t, CharConfusion> ConfusionModel::visually_similar() {
  std::map<char32_t, CharConfusion> m;
  for (const auto& [c, alts] : std::initializer_list<std::pair<char32_t, const char32_t*>>{
           {U'a', U"o"},  {U'o', U"a0"}, {U'0', U"o"},  {U'l', U"1i"}, {U'1', U"l"},
           {U'i', U"l"},  {U'u', U"v"},  {U'v', U"u"},  {U's', U"5"},  {U'5', U"s"},
           {U'z', U"2"},  {U'2', U"z"},  {U'g', U"9q"}, {U'9', U"g"},  {U'q', U"g"},
           {U'b', U"6"},  {U'6', U"b"},  {U'e', U"c"},  {U'c', U"e"},  {U'n', U"h"},
           {U'h', U"n"},  {U't', U"+"},  {U'+', U"t"},  {U'r', U"v"},  {U'8', U"b"},
           {U'4', U"y"},  {U'y', U"4"},  {U'7', U"t"}}) {
    m[c].alternatives = alts;
  }
  return m;
}

void ConfusionModel::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); };
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_unit(p_correct) || !in_unit(p_delete) || !in_unit(p_insert)) {
    bad("channel probabilities must lie in [0,1]");
  }
  if (p_delete + p_insert > 1.0) bad("p_delete + p_insert must not exceed 1");
  if (p_insert > 0.0 && insertions.empty()) bad("p_insert > 0 needs insertion characters");
  if (alphabet.empty()) bad("channel alphabet is empty");
  for (const auto& [c, conf] : confusions) {
    if (conf.p_correct && !in_unit(*conf.p_correct)) {
      bad("per-character p_correct must lie in [0,1]");
    }
    if (conf.alternatives.find(c) != std::u32string::npos) {
      bad("a character cannot be its own alternative");
    }
  }
}

std::vector<std::pair<char32_t, double>> ConfusionModel::substitutions(char32_t c) const {
  double keep = p_correct;
  std::u32string alts;
  if (const auto it = confusions.find(c); it != confusions.end()) {
    if (it->second.p_correct) keep = *it->second.p_correct;
    alts = it->second.alternatives;
  }
  if (alts.empty()) {
    for (char32_t a : alphabet) {
      if (a != c) alts.push_back(a);
    }
  }
  std::sort(alts.begin(), alts.end());
  alts.erase(std::unique(alts.begin(), alts.end()), alts.end());
  if (alts.empty()) keep = 1.0;

  std::vector<std::pair<char32_t, double>> out{{c, keep}};
  const double share = alts.empty() ? 0.0 : (1.0 - keep) / static_cast<double>(alts.size());
  for (char32_t a : alts) out.emplace_back(a, share);
  return out;
}

ConfusionModel ConfusionModel::from_json(std::string_view document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("channel: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "channel must be a JSON object");
  ConfusionModel m;
  try {
    m.p_correct = j.value("p_correct", m.p_correct);
    m.p_delete = j.value("p_delete", m.p_delete);
    m.p_insert = j.value("p_insert", m.p_insert);
    m.seed = j.value("seed", m.seed);
    if (j.contains("alphabet")) m.alphabet = text::to_nfc_u32(j.at("alphabet").get<std::string>());
    if (j.contains("insertions")) {
      m.insertions = text::to_nfc_u32(j.at("insertions").get<std::string>());
    }
    if (!j.value("use_default_confusions", true)) m.confusions.clear();
    if (j.contains("confusions")) {
      for (const auto& [key, value] : j.at("confusions").items()) {
        const std::u32string c = text::to_nfc_u32(key);
        if (c.size() != 1) throw Error(ErrorCode::kParseError, "confusion keys must be one character");
        CharConfusion conf;
        if (value.contains("p_correct")) conf.p_correct = value.at("p_correct").get<double>();
        conf.alternatives = text::to_nfc_u32(value.value("alternatives", std::string()));
        m.confusions[c.front()] = conf;
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("channel: ") + e.what());
  }
  m.validate();
  return m;
}

ConfusionModel ConfusionModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t h, std::u32string_view s) {
  for (char32_t c : s) h = splitmix64(h ^ c);
  return splitmix64(h ^ s.size());
}

struct Arc {
  std::u32string output;
  double cost;
  std::uint64_t tie;
};

std::vector<std::vector<Arc>> build_lattice(const std::u32string& label,
                                            const ConfusionModel& m) {
  const std::uint64_t label_hash = mix(splitmix64(m.seed), label);
  const double p_plain = 1.0 - m.p_delete - m.p_insert;
  std::vector<std::vector<Arc>> lattice(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) {
    std::vector<std::pair<std::u32string, double>> options;
    if (m.p_delete > 0.0) options.emplace_back(U"", m.p_delete);
    for (const auto& [x, q] : m.substitutions(label[i])) {
      if (q <= 0.0) continue;
      if (p_plain > 0.0) options.emplace_back(std::u32string(1, x), p_plain * q);
      if (m.p_insert > 0.0) {
        const double each = m.p_insert * q / static_cast<double>(m.insertions.size());
        for (char32_t y : m.insertions) options.emplace_back(std::u32string{x, y}, each);
      }
    }
    auto& arcs = lattice[i];
    const std::uint64_t position_hash = splitmix64(label_hash ^ (i + 1));
    for (auto& [out, p] : options) {
      arcs.push_back({out, -std::log(p), mix(position_hash, out)});
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
      if (a.cost != b.cost) return a.cost < b.cost;
      if (a.tie != b.tie) return a.tie < b.tie;
      return a.output < b.output;
    });
  }
  return lattice;
}

}  // namespace

CandidateList corrupt(std::string_view label, const ConfusionModel& model, std::size_t n_best) {
  const std::u32string l = text::to_nfc_u32(label);
  if (l.empty()) throw Error(ErrorCode::kEmptyLabel, "cannot corrupt an empty label");
  if (n_best == 0) throw Error(ErrorCode::kInvalidArgument, "n_best must be >= 1");
  model.validate();

  const auto lattice = build_lattice(l, model);
  const std::size_t n = lattice.size();

  // Each index vector has a unique parent: decrement its last non-zero
  // position. Children increment one position at or after that one, so every
  // path is generated once and costs never decrease along the expansion.
  struct Path {
    double cost;
    std::vector<std::uint32_t> index;
    std::size_t pivot;
  };
  auto worse = [](const Path& a, const Path& b) {
    if (a.cost != b.cost) return a.cost > b.cost;
    return a.index > b.index;
  };
  std::priority_queue<Path, std::vector<Path>, decltype(worse)> heap(worse);
  // Summed left to right from scratch so equal paths get bit-identical costs.
  auto path_cost = [&](const std::vector<std::uint32_t>& index) {
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) cost += lattice[i][index[i]].cost;
    return cost;
  };
  {
    Path root{0.0, std::vector<std::uint32_t>(n, 0), 0};
    root.cost = path_cost(root.index);
    heap.push(std::move(root));
  }

  CandidateList out;
  out.source_id = text::encode_utf8(l);
  std::set<std::u32string> emitted;
  const std::size_t max_pops = n_best * 64;
  for (std::size_t pops = 0; !heap.empty() && out.items.size() < n_best && pops < max_pops;
       ++pops) {
    Path path = heap.top();
    heap.pop();
    std::u32string produced;
    for (std::size_t i = 0; i < n; ++i) produced += lattice[i][path.index[i]].output;
    if (emitted.insert(produced).second) {
      out.items.push_back({text::encode_utf8(produced), path.cost});
    }
    for (std::size_t i = path.pivot; i < n; ++i) {
      if (path.index[i] + 1 >= lattice[i].size()) continue;
      Path child = path;
      ++child.index[i];
      child.pivot = i;
      child.cost = path_cost(child.index);
      heap.push(std::move(child));
    }
  }
  return out;
}

DecodeResult decode(const CandidateList& candidates, const LanguageModel* lm, double lambda) {
  if (candidates.items.empty()) throw Error(ErrorCode::kInvalidArgument, "no candidates");
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must lie in [0,1]");
  }
  if (lm == nullptr || lambda == 0.0) return {candidates.items.front().text, 0, false};

  std::size_t best = 0;
  double best_score = std::numeric_limits<double>::infinity();
  bool any_accepted = false;
  for (std::size_t i = 0; i < candidates.items.size(); ++i) {
    const Cost lm_cost = lm->score(std::string_view(candidates.items[i].text));
    if (!lm_cost) continue;
    any_accepted = true;
    const double combined = (1.0 - lambda) * candidates.items[i].cost + lambda * *lm_cost;
    if (combined < best_score) {
      best_score = combined;
      best = i;
    }
  }
  if (!any_accepted) return {candidates.items.front().text, 0, true};
  return {candidates.items[best].text, best, false};
}

const EvalRow* EvalReport::find(std::string_view config, Category category) const {
  for (const auto& row : rows) {
    if (row.config == config && row.category == category) return &row;
  }
  return nullptr;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string EvalReport::to_csv() const {
  std::ostringstream out;
  out << "config,category,n_messages,n_chars,rr_percent\n";
  for (const auto& row : rows) {
    out << csv_field(row.config) << ',' << to_string(row.category) << ',' << row.n_messages
        << ',' << row.n_chars << ',' << row.rr().format(4) << '\n';
  }
  return out.str();
}

std::string EvalReport::to_table() const {
  std::vector<std::string> configs;
  std::vector<Category> categories;
  for (const auto& row : rows) {
    if (std::find(configs.begin(), configs.end(), row.config) == configs.end()) {
      configs.push_back(row.config);
    }
    if (std::find(categories.begin(), categories.end(), row.category) == categories.end()) {
      categories.push_back(row.category);
    }
  }
  std::size_t width = 8;
  for (const auto& c : configs) width = std::max(width, c.size() + 2);

  std::ostringstream out;
  out << std::left << std::setw(10) << "category" << std::right << std::setw(8) << "msgs"
      << std::setw(8) << "chars";
  for (const auto& c : configs) out << std::setw(static_cast<int>(width)) << c;
  out << '\n';
  for (Category cat : categories) {
    const EvalRow* first = nullptr;
    for (const auto& c : configs) {
      if ((first = find(c, cat)) != nullptr) break;
    }
    out << std::left << std::setw(10) << to_string(cat) << std::right << std::setw(8)
        << first->n_messages << std::setw(8) << first->n_chars;
    for (const auto& c : configs) {
      const EvalRow* row = find(c, cat);
      out << std::setw(static_cast<int>(width)) << (row ? row->rr().format(1) + "%" : "-");
    }
    out << '\n';
  }
  return out.str();
}

EvalReport evaluate(std::span<const MessageRecord> corpus, const ConfusionModel& channel,
                    std::span<const EvalConfig> configs, std::size_t n_best) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "evaluation corpus is empty");
  if (configs.empty()) throw Error(ErrorCode::kInvalidArgument, "no configurations to evaluate");
  channel.validate();

  std::vector<CandidateList> lattices;
  lattices.reserve(corpus.size());
  for (const auto& record : corpus) {
    lattices.push_back(corrupt(record.label, channel, n_best));
    lattices.back().source_id = record.id;
  }

  EvalReport report;
  for (const auto& config : configs) {
    for (Category category : kAllCategories) {
      EvalRow row{config.name, category};
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (corpus[i].category != category) continue;
        const DecodeResult d = decode(lattices[i], config.lm.get(), config.lambda);
        const rr::RRResult r = rr::recognition_rate(corpus[i].label, d.text);
        ++row.n_messages;
        row.n_chars += r.label_length;
        row.distance += r.distance;
      }
      if (row.n_messages > 0) report.rows.push_back(std::move(row));
    }
  }
  return report;
}

ScoredModel make_optimal_lexicon_model(std::span<const MessageRecord> corpus) {
  Lexicon lexicon;
  for (const auto& record : corpus) lexicon.add(record.label);
  return make_lexicon_model(lexicon);
}

}  // namespace neography::sim
