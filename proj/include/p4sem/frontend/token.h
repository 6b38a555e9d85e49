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


#ifndef P4SEM_FRONTEND_TOKEN_H_
#define P4SEM_FRONTEND_TOKEN_H_

#include <optional>
#include <string>
#include <vector>

#include "p4sem/common/bigint.h"
#include "p4sem/common/span.h"

namespace p4sem {

enum class TokenKind {
  kIdentifier,
  kInteger,
  kWidthInteger,  // e.g. 8'255, 16'0x0800, 8w255
  kKeyword,
  kPunct,
  kEnd,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;  // exact source slice
  SourceSpan span;
  size_t offset = 0;  // byte offset of the first character
  BigInt value = 0;   // integer tokens
  std::optional<int> width;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return is(TokenKind::kPunct, t); }
  bool is_word(std::string_view t) const {
    return (kind == TokenKind::kKeyword || kind == TokenKind::kIdentifier) && text == t;
  }
};

// Reserved words of P4-14 v1.0.4 that never serve as identifiers. Attribute
// names such as `width` or `type` stay identifiers and are matched by text.
bool is_reserved_word(std::string_view word);

// Splits source text into tokens; the final token is kEnd. Comments and
// `@pragma` lines are skipped. Throws Error(kLexError).
std::vector<Token> tokenize(std::string_view source);

}  // namespace p4sem

#endif  // P4SEM_FRONTEND_TOKEN_H_
