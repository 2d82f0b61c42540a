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

#ifndef NEOGRAPHY_MESSAGE_RECORD_HPP_
#define NEOGRAPHY_MESSAGE_RECORD_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace neography {

enum class Hand { kBoxed, kCursive };
enum class Source { kGiven, kFree };
enum class Category { kSkeleton, kRebus, kPhonetic, kOther };

inline constexpr std::array<Category, 4> kAllCategories = {
    Category::kSkeleton, Category::kRebus, Category::kPhonetic, Category::kOther};

std::string_view to_string(Hand hand);
std::string_view to_string(Source source);
std::string_view to_string(Category category);
// Return nullopt for unknown names.
std::optional<Hand> parse_hand(std::string_view name);
std::optional<Source> parse_source(std::string_view name);
std::optional<Category> parse_category(std::string_view name);

// One handwritten short message.
struct MessageRecord {
  std::string id;
  int writer = 0;
  Hand hand = Hand::kBoxed;
  Source source = Source::kFree;
  std::string label;
  Category category = Category::kOther;
  // Standard spelling the label was derived from (synthetic corpora only).
  std::optional<std::string> standard;

  friend bool operator==(const MessageRecord&, const MessageRecord&) = default;
};

}  // namespace neography

#endif  // NEOGRAPHY_MESSAGE_RECORD_HPP_
