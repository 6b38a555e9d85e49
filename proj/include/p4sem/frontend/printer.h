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


#ifndef P4SEM_FRONTEND_PRINTER_H_
#define P4SEM_FRONTEND_PRINTER_H_

#include <string>

#include "p4sem/frontend/ast.h"

namespace p4sem {

// Pretty-prints a syntax tree as P4-14 source. Binary and unary expressions
// are fully parenthesized so that re-parsing yields an identical tree.
std::string print_program(const ast::SyntaxTree& tree);
std::string print_expression(const ast::Expr& expr);
std::string print_name(const ast::NameExpr& name);
std::string print_field(const ast::FieldExpr& field);

}  // namespace p4sem

#endif  // P4SEM_FRONTEND_PRINTER_H_
