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

#include "neography/message_record.hpp"

namespace neography {

std::string_view to_string(Hand hand) {
  return hand == Hand::kBoxed ? "boxed" : "cursive";
}

std::string_view to_string(Source source) {
  return source == Source::kGiven ? "given" : "free";
}

std::string_view to_string(Category category) {
  switch (category) {
    case Category::kSkeleton: return "skeleton";
    case Category::kRebus: return "rebus";
    case Category::kPhonetic: return "phonetic";
    case Category::kOther: return "other";
  }
  return "other";
}

std::optional<Hand> parse_hand(std::string_view name) {
  if (name == "boxed") return Hand::kBoxed;
  if (name == "cursive") return Hand::kCursive;
  return std::nullopt;
}

std::optional<Source> parse_source(std::string_view name) {
  if (name == "given") return Source::kGiven;
  if (name == "free") return Source::kFree;
  return std::nullopt;
}

std::optional<Category> parse_category(std::string_view name) {
  for (Category c : kAllCategories) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

}  // namespace neography
