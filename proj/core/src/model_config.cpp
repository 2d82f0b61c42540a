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

#include "neography/model_config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "neography/error.hpp"
#include "neography/ngram.hpp"
#include "neography/phonetic.hpp"
#include "neography/rebus.hpp"
#include "neography/skeleton.hpp"
#include "neography/stochastic_regex.hpp"
#include "neography/text.hpp"

namespace neography::config {

using json = nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, "model document: " + what);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_document(std::string_view document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    schema_error(e.what());
  }
}

std::filesystem::path resolve(const ModelContext& ctx, const json& desc, const char* key) {
  if (!desc.contains(key) || !desc.at(key).is_string()) {
    schema_error(std::string("missing string field \"") + key + "\"");
  }
  std::filesystem::path p = desc.at(key).get<std::string>();
  return p.is_absolute() ? p : ctx.base_dir / p;
}

Lexicon top_words(const Lexicon& lexicon, const json& desc) {
  if (!desc.contains("top_k")) return lexicon;
  const auto k = desc.at("top_k").get<std::size_t>();
  if (lexicon.size() < k) {
    throw Error(ErrorCode::kInsufficientLexicon, "lexicon smaller than top_k");
  }
  Lexicon out;
  for (const auto& w : lexicon.top_k(k)) out.add(w, lexicon.frequency(w));
  return out;
}

ScoredModel build(const json& desc, const ModelContext& ctx) {
  if (!desc.is_object()) schema_error("model must be an object");
  if (!desc.contains("type")) {
    return make_automaton_model(compile(StochasticRegex::from_json(desc.dump())));
  }
  const auto type = desc.at("type").get<std::string>();
  if (type == "none") return nullptr;
  if (type == "uniform") {
    return make_uniform_model(text::to_nfc_u32(desc.value("alphabet", std::string())));
  }
  if (type == "regex") {
    if (!desc.contains("regex")) schema_error("regex model without \"regex\"");
    return make_automaton_model(compile(StochasticRegex::from_json(desc.at("regex").dump())));
  }
  if (type == "skeleton") {
    const auto params = desc.contains("params")
                            ? skeleton::SkeletonParams::from_json(desc.at("params").dump())
                            : skeleton::SkeletonParams{};
    return make_automaton_model(skeleton::build_skeleton_automaton(params));
  }
  if (type == "rebus") {
    const auto params = desc.contains("params")
                            ? rebus::RebusParams::from_json(desc.at("params").dump())
                            : rebus::RebusParams{};
    return make_automaton_model(rebus::build_rebus_automaton(params));
  }
  if (type == "lexicon") {
    if (desc.contains("words")) {
      Lexicon lex;
      for (const auto& w : desc.at("words")) lex.add(w.get<std::string>());
      return make_lexicon_model(lex);
    }
    return make_lexicon_model(top_words(load_frequency_list(resolve(ctx, desc, "path")), desc));
  }
  if (type == "skeleton-lexicon") {
    const Lexicon source = top_words(load_frequency_list(resolve(ctx, desc, "path")), desc);
    return make_lexicon_model(skeleton::build_skeleton_lexicon(source));
  }
  if (type == "homophone-lexicon") {
    const Lexicon freq = load_frequency_list(resolve(ctx, desc, "path"));
    const auto rules = desc.contains("rules")
                           ? phonetic::RuleSet::load(resolve(ctx, desc, "rules"))
                           : phonetic::RuleSet::defaults();
    const auto top_k = desc.value("top_k", freq.size());
    return make_lexicon_model(phonetic::build_homophone_lexicon(freq, top_k, rules).lexicon);
  }
  if (type == "ngram") {
    std::vector<std::string> strings;
    if (desc.contains("strings")) {
      strings = desc.at("strings").get<std::vector<std::string>>();
    } else {
      for (const auto& [word, entry] : load_frequency_list(resolve(ctx, desc, "path")).entries()) {
        strings.push_back(word);
      }
    }
    std::optional<std::u32string> alphabet;
    if (desc.contains("alphabet")) {
      alphabet = text::to_nfc_u32(desc.at("alphabet").get<std::string>());
    }
    return std::make_shared<NGramModel>(
        train_ngram(strings, desc.value("order", 3), desc.value("k", 0.5), alphabet));
  }
  if (type == "optimal-lexicon") {
    if (ctx.corpus.empty()) schema_error("optimal-lexicon needs a corpus");
    return sim::make_optimal_lexicon_model(ctx.corpus);
  }
  if (type == "interpolate") {
    if (!desc.contains("components") || !desc.at("components").is_array()) {
      schema_error("interpolate needs a \"components\" array");
    }
    std::vector<std::pair<ScoredModel, double>> parts;
    for (const auto& c : desc.at("components")) {
      if (!c.contains("weight") || !c.contains("model")) {
        schema_error("each component needs \"weight\" and \"model\"");
      }
      ScoredModel m = build(c.at("model"), ctx);
      if (!m) schema_error("\"none\" cannot be interpolated");
      parts.emplace_back(std::move(m), c.at("weight").get<double>());
    }
    return interpolate(parts);
  }
  schema_error("unknown model type \"" + type + "\"");
}

}  // namespace

ScoredModel parse_model(std::string_view document, const ModelContext& context) {
  const json desc = parse_document(document);
  try {
    return build(desc, context);
  } catch (const json::exception& e) {
    schema_error(e.what());
  }
}

ScoredModel load_model(const std::filesystem::path& path,
                       std::span<const MessageRecord> corpus) {
  return parse_model(read_file(path), {path.parent_path(), corpus});
}

Experiment parse_experiment(std::string_view document, const ModelContext& context) {
  const json j = parse_document(document);
  Experiment ex;
  try {
    ex.n_best = j.value("n_best", ex.n_best);
    if (!j.contains("configs") || !j.at("configs").is_array() || j.at("configs").empty()) {
      schema_error("experiment needs a non-empty \"configs\" array");
    }
    for (const auto& c : j.at("configs")) {
      sim::EvalConfig config;
      config.name = c.at("name").get<std::string>();
      config.lambda = c.value("lambda", 0.5);
      config.lm = c.contains("model") ? build(c.at("model"), context) : nullptr;
      ex.configs.push_back(std::move(config));
    }
  } catch (const json::exception& e) {
    schema_error(e.what());
  }
  return ex;
}

Experiment load_experiment(const std::filesystem::path& path,
                           std::span<const MessageRecord> corpus) {
  return parse_experiment(read_file(path), {path.parent_path(), corpus});
}

}  // namespace neography::config
