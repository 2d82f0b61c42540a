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

#ifndef NEOGRAPHY_TEXT_HPP_
#define NEOGRAPHY_TEXT_HPP_

#include <string>
#include <string_view>

// UTF-8 helpers. All character-level work in the library happens on Unicode
// scalar values (char32_t), after NFC normalization.
namespace neography::text {

// Throws Error(kInvalidUtf8) on malformed input.
std::u32string decode_utf8(std::string_view utf8);
std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t c);

std::string nfc(std::string_view utf8);
std::u32string to_nfc_u32(std::string_view utf8);

// Full Unicode case folding followed by NFC.
std::string fold_case(std::string_view utf8);

// Number of scalar values after NFC.
std::size_t scalar_length(std::string_view utf8);

}  // namespace neography::text

#endif  // NEOGRAPHY_TEXT_HPP_
