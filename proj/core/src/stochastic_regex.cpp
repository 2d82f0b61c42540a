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

#include "neography/stochastic_regex.hpp"

#include <cmath>
#include <optional>

#include "json.hpp"
#include "neography/error.hpp"
#include "neography/text.hpp"

namespace neography {

using json = nlohmann::json;

struct StochasticRegex::Node {
  Kind kind;
  char32_t c = 0;
  std::optional<CharClass> cls;
  std::vector<StochasticRegex> children;
  std::vector<double> weights;
  double p = 0.0;
};

StochasticRegex::StochasticRegex(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

StochasticRegex StochasticRegex::literal(char32_t c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kLiteral;
  n->c = c;
  return StochasticRegex(std::move(n));
}

StochasticRegex StochasticRegex::text(std::u32string_view s) {
  if (s.size() == 1) return literal(s.front());
  std::vector<StochasticRegex> parts;
  parts.reserve(s.size());
  for (char32_t c : s) parts.push_back(literal(c));
  return concat(std::move(parts));
}

StochasticRegex StochasticRegex::char_class(CharClass cls) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kClass;
  n->cls = std::move(cls);
  return StochasticRegex(std::move(n));
}

StochasticRegex StochasticRegex::concat(std::vector<StochasticRegex> children) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConcat;
  n->children = std::move(children);
  return StochasticRegex(std::move(n));
}

StochasticRegex StochasticRegex::alternation(std::vector<Branch> branches) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kUnion;
  for (auto& b : branches) {
    n->weights.push_back(b.probability);
    n->children.push_back(std::move(b.node));
  }
  return StochasticRegex(std::move(n));
}

StochasticRegex StochasticRegex::repeat(StochasticRegex body,
                                        double continue_probability) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kRepeat;
  n->children.push_back(std::move(body));
  n->p = continue_probability;
  return StochasticRegex(std::move(n));
}

StochasticRegex StochasticRegex::optional(StochasticRegex body,
                                          double take_probability) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOptional;
  n->children.push_back(std::move(body));
  n->p = take_probability;
  return StochasticRegex(std::move(n));
}

StochasticRegex::Kind StochasticRegex::kind() const noexcept { return node_->kind; }

char32_t StochasticRegex::literal_char() const { return node_->c; }

const CharClass& StochasticRegex::char_class() const { return *node_->cls; }

const std::vector<StochasticRegex>& StochasticRegex::children() const noexcept {
  return node_->children;
}

const std::vector<double>& StochasticRegex::weights() const noexcept {
  return node_->weights;
}

double StochasticRegex::probability() const noexcept { return node_->p; }

void StochasticRegex::validate() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kLiteral:
    case Kind::kClass:
      return;
    case Kind::kConcat:
      break;
    case Kind::kUnion: {
      if (n.children.empty()) {
        throw Error(ErrorCode::kInvalidRegex, "union without branches");
      }
      double sum = 0.0;
      for (double w : n.weights) {
        if (!(w > 0.0)) {
          throw Error(ErrorCode::kInvalidRegex,
                      "union branch probability must be > 0");
        }
        sum += w;
      }
      if (std::abs(sum - 1.0) > 1e-9) {
        throw Error(ErrorCode::kInvalidRegex,
                    "union probabilities sum to " + std::to_string(sum));
      }
      break;
    }
    case Kind::kRepeat:
      if (!(n.p > 0.0 && n.p < 1.0)) {
        throw Error(ErrorCode::kInvalidRegex,
                    "repeat continue probability must lie in (0,1)");
      }
      break;
    case Kind::kOptional:
      if (!(n.p >= 0.0 && n.p <= 1.0)) {
        throw Error(ErrorCode::kInvalidRegex,
                    "optional take probability must lie in [0,1]");
      }
      break;
  }
  for (const auto& child : n.children) child.validate();
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, "regex document: " + what);
}

double probability_field(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.at("p").is_number()) {
    schema_error("expected an object with numeric \"p\"");
  }
  return j.at("p").get<double>();
}

StochasticRegex parse_node(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    schema_error("each node must be an object with exactly one tag");
  }
  const std::string tag = j.begin().key();
  const json& body = j.begin().value();
  if (tag == "lit") {
    if (!body.is_string()) schema_error("\"lit\" takes a string");
    const std::u32string s = text::to_nfc_u32(body.get<std::string>());
    if (s.empty()) schema_error("\"lit\" must not be empty");
    return StochasticRegex::text(s);
  }
  if (tag == "class") {
    if (body.is_string()) {
      const auto* cls = CharClass::builtin(body.get<std::string>());
      if (cls == nullptr) schema_error("unknown class " + body.dump());
      return StochasticRegex::char_class(*cls);
    }
    if (!body.is_object() || !body.contains("members") ||
        !body.at("members").is_string()) {
      schema_error("\"class\" takes a built-in name or {name, members}");
    }
    const std::string name = body.value("name", std::string("custom"));
    return StochasticRegex::char_class(
        CharClass(name, text::to_nfc_u32(body.at("members").get<std::string>())));
  }
  if (tag == "concat") {
    if (!body.is_array()) schema_error("\"concat\" takes an array");
    std::vector<StochasticRegex> parts;
    for (const auto& part : body) parts.push_back(parse_node(part));
    return StochasticRegex::concat(std::move(parts));
  }
  if (tag == "union") {
    if (!body.is_array()) schema_error("\"union\" takes an array");
    std::vector<StochasticRegex::Branch> branches;
    for (const auto& b : body) {
      const double p = probability_field(b);
      if (!b.contains("node")) schema_error("union branch without \"node\"");
      branches.push_back({p, parse_node(b.at("node"))});
    }
    return StochasticRegex::alternation(std::move(branches));
  }
  if (tag == "repeat" || tag == "optional") {
    const double p = probability_field(body);
    if (!body.contains("node")) schema_error("\"" + tag + "\" without \"node\"");
    auto child = parse_node(body.at("node"));
    return tag == "repeat" ? StochasticRegex::repeat(std::move(child), p)
                           : StochasticRegex::optional(std::move(child), p);
  }
  schema_error("unknown tag \"" + tag + "\"");
}

json to_json_value(const StochasticRegex& r) {
  switch (r.kind()) {
    case StochasticRegex::Kind::kLiteral:
      return {{"lit", text::encode_utf8(r.literal_char())}};
    case StochasticRegex::Kind::kClass: {
      const CharClass& cls = r.char_class();
      if (const auto* builtin = CharClass::builtin(cls.name());
          builtin != nullptr && *builtin == cls) {
        return {{"class", cls.name()}};
      }
      std::u32string members(cls.members().begin(), cls.members().end());
      return {{"class", {{"name", cls.name()}, {"members", text::encode_utf8(members)}}}};
    }
    case StochasticRegex::Kind::kConcat: {
      json parts = json::array();
      for (const auto& c : r.children()) parts.push_back(to_json_value(c));
      return {{"concat", parts}};
    }
    case StochasticRegex::Kind::kUnion: {
      json branches = json::array();
      for (std::size_t i = 0; i < r.children().size(); ++i) {
        branches.push_back({{"p", r.weights()[i]}, {"node", to_json_value(r.children()[i])}});
      }
      return {{"union", branches}};
    }
    case StochasticRegex::Kind::kRepeat:
      return {{"repeat", {{"p", r.probability()}, {"node", to_json_value(r.children()[0])}}}};
    case StochasticRegex::Kind::kOptional:
      return {{"optional", {{"p", r.probability()}, {"node", to_json_value(r.children()[0])}}}};
  }
  return nullptr;
}

}  // namespace

StochasticRegex StochasticRegex::from_json(std::string_view document) {
  json j;
  try {
    j = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("regex document: ") + e.what());
  }
  auto regex = parse_node(j);
  regex.validate();
  return regex;
}

std::string StochasticRegex::to_json() const { return to_json_value(*this).dump(); }

}  // namespace neography
