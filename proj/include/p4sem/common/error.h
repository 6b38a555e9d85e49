// Copyright 2026 The p4sem Authors
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


#ifndef P4SEM_COMMON_ERROR_H_
#define P4SEM_COMMON_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "p4sem/common/span.h"

namespace p4sem {

// Static (non-runtime) failures: lexing, parsing, elaboration, input files.
enum class ErrorCode {
  kLexError,
  kParseError,
  kUnresolvedName,
  kDuplicateName,
  kPayloadUnsupported,
  kNoIngress,
  kVarbitMisplaced,
  kFieldListCycle,
  kDeparseOrderConflict,
  kWidthOverflow,
  kHashWidthMismatch,
  kTypeError,
  kControlScriptError,
  kTopoParseError,
  kStfParseError,
  kFileNotFound,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::optional<SourceSpan> span = std::nullopt);

  ErrorCode code() const { return code_; }
  const std::optional<SourceSpan>& span() const { return span_; }
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<SourceSpan> span_;
};

}  // namespace p4sem

#endif  // P4SEM_COMMON_ERROR_H_
