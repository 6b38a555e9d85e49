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


#ifndef P4SEM_FRONTEND_PARSER_H_
#define P4SEM_FRONTEND_PARSER_H_

#include <span>
#include <string_view>
#include <vector>

#include "p4sem/frontend/ast.h"
#include "p4sem/frontend/token.h"

namespace p4sem {

// Parses a token stream ending in kEnd. Throws Error(kParseError) at the first
// syntax violation with the set of expected tokens in the message.
ast::SyntaxTree parse_program(std::span<const Token> tokens);

// tokenize + parse_program.
ast::SyntaxTree parse_source(std::string_view source);

// Parses a single expression (the whole input must be consumed).
ast::Expr parse_expression(std::string_view source);

// How a minus sign was read.
enum class MinusReading {
  kNone,             // not a minus form
  kNegativeLiteral,  // `-5`: one constant, width bit_length(5) + 1
  kUnaryNegation,    // `-(5)`, `-x`: negation of an operand
  kSubtraction,      // `7 - 5`
};

// Classifies the top node of a parsed expression. Prefix `-` directly
// followed by an integer literal is a negative literal; prefix `-` before
// anything else is negation; infix `-` is subtraction.
MinusReading classify_minus(const ast::Expr& expr);

}  // namespace p4sem

#endif  // P4SEM_FRONTEND_PARSER_H_
