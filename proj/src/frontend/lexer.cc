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


#include <array>
#include <cctype>

#include "p4sem/common/error.h"
#include "p4sem/frontend/token.h"

namespace p4sem {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kInteger: return "integer-literal";
    case TokenKind::kWidthInteger: return "width-prefixed-literal";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kPunct: return "punctuation";
    case TokenKind::kEnd: return "end-of-input";
  }
  return "?";
}

namespace {

constexpr std::array<std::string_view, 40> kReserved = {
    "header_type", "header", "metadata", "fields", "parser", "parser_exception",
    "extract", "set_metadata", "return", "select", "default", "current", "latest",
    "parser_drop", "parse_error", "field_list", "field_list_calculation",
    "calculated_field", "verify", "update", "counter", "meter", "register",
    "action", "table", "reads", "actions", "control", "apply", "if", "else",
    "hit", "miss", "valid", "payload", "mask", "and", "or", "not", "next",
};

// Longest first so that maximal munch works by prefix test.
constexpr std::array<std::string_view, 30> kPunct = {
    "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "{", "}", "(", ")", "[", "]", ";", ":", ",", ".", "=", "<", ">",
    "+", "-", "*", "/", "%", "&", "|", "^", "~",
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    Token end;
    end.kind = TokenKind::kEnd;
    end.span = {line_, col_};
    end.offset = pos_;
    out.push_back(end);
    return out;
  }

 private:
  char peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_trivia() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourceSpan start{line_, col_};
        advance(2);
        while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= src_.size()) throw Error(ErrorCode::kLexError, "unterminated comment", start);
        advance(2);
      } else if (c == '@' && src_.substr(pos_, 7) == "@pragma") {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, size_t start, SourceSpan span) {
    Token t;
    t.kind = kind;
    t.text = std::string(src_.substr(start, pos_ - start));
    t.span = span;
    t.offset = start;
    return t;
  }

  Token next() {
    const size_t start = pos_;
    const SourceSpan span{line_, col_};
    const char c = peek();
    if (is_ident_start(c)) {
      while (is_ident_char(peek())) advance();
      Token t = make(TokenKind::kIdentifier, start, span);
      if (is_reserved_word(t.text)) t.kind = TokenKind::kKeyword;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number(start, span);
    if (c == '#') {
      advance();
      return make(TokenKind::kPunct, start, span);
    }
    for (std::string_view p : kPunct) {
      if (src_.substr(pos_, p.size()) == p) {
        advance(p.size());
        return make(TokenKind::kPunct, start, span);
      }
    }
    throw Error(ErrorCode::kLexError,
                std::string("unexpected character '") + c + "'", span);
  }

  std::string_view scan_digits() {
    const size_t start = pos_;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' || peek(1) == 'B')) {
      advance(2);
    }
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
    return src_.substr(start, pos_ - start);
  }

  Token number(size_t start, SourceSpan span) {
    // Width prefix: decimal digits followed by ' or w.
    size_t p = pos_;
    while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
    std::optional<int> width;
    if (p < src_.size() && (src_[p] == '\'' || src_[p] == 'w') && p + 1 < src_.size() &&
        (std::isdigit(static_cast<unsigned char>(src_[p + 1])) ||
         (src_[p] == '\'' && src_[p + 1] == 'w'))) {
      width = std::stoi(std::string(src_.substr(pos_, p - pos_)));
      advance(p - pos_ + 1);
      if (peek() == 'w') advance();
    }
    std::string_view digits = scan_digits();
    BigInt value;
    if (!parse_integer(digits, &value)) {
      throw Error(ErrorCode::kLexError, "malformed integer literal '" +
                                            std::string(src_.substr(start, pos_ - start)) + "'",
                  span);
    }
    Token t = make(width ? TokenKind::kWidthInteger : TokenKind::kInteger, start, span);
    t.value = value;
    t.width = width;
    if (width && *width < 1) throw Error(ErrorCode::kLexError, "zero width literal", span);
    return t;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

bool is_reserved_word(std::string_view word) {
  for (std::string_view r : kReserved) {
    if (r == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace p4sem
