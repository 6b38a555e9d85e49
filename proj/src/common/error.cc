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


#include "p4sem/common/error.h"

#include <utility>

namespace p4sem {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLexError: return "LEX_ERROR";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kUnresolvedName: return "UNRESOLVED_NAME";
    case ErrorCode::kDuplicateName: return "DUPLICATE_NAME";
    case ErrorCode::kPayloadUnsupported: return "PAYLOAD_UNSUPPORTED";
    case ErrorCode::kNoIngress: return "NO_INGRESS";
    case ErrorCode::kVarbitMisplaced: return "VARBIT_MISPLACED";
    case ErrorCode::kFieldListCycle: return "FIELD_LIST_CYCLE";
    case ErrorCode::kDeparseOrderConflict: return "DEPARSE_ORDER_CONFLICT";
    case ErrorCode::kWidthOverflow: return "WIDTH_OVERFLOW";
    case ErrorCode::kHashWidthMismatch: return "HASH_WIDTH_MISMATCH";
    case ErrorCode::kTypeError: return "TYPE_ERROR";
    case ErrorCode::kControlScriptError: return "CONTROL_SCRIPT_ERROR";
    case ErrorCode::kTopoParseError: return "TOPO_PARSE_ERROR";
    case ErrorCode::kStfParseError: return "STF_PARSE_ERROR";
    case ErrorCode::kFileNotFound: return "FILE_NOT_FOUND";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

namespace {

std::string format_error(ErrorCode code, const std::string& message,
                         const std::optional<SourceSpan>& span) {
  std::string out(error_code_name(code));
  if (span) out += " at " + span->to_string();
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string message, std::optional<SourceSpan> span)
    : std::runtime_error(format_error(code, message, span)),
      code_(code),
      message_(std::move(message)),
      span_(span) {}

}  // namespace p4sem
