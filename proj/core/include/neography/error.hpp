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

#ifndef NEOGRAPHY_ERROR_HPP_
#define NEOGRAPHY_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace neography {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidRegex,
  kBadWeights,
  kEmptyCorpus,
  kEmptyLabel,
  kEmptyWord,
  kEmptyLexicon,
  kInsufficientLexicon,
  kParseError,
  kDuplicateId,
  kInvalidUtf8,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `line()` is set for errors that come
// from a line-oriented input file (1-based).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace neography

#endif  // NEOGRAPHY_ERROR_HPP_
