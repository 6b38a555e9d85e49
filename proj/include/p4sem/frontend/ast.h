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


#ifndef P4SEM_FRONTEND_AST_H_
#define P4SEM_FRONTEND_AST_H_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "p4sem/common/box.h"
#include "p4sem/common/span.h"
#include "p4sem/values/const_expr.h"
#include "p4sem/values/value.h"

// Concrete syntax tree for P4-14 v1.0.4. Every node carries a span; spans do
// not take part in equality.
namespace p4sem::ast {

struct Expr;

// `[3]`, `[next]` or `[last]` after a header stack name.
struct HeaderIndex {
  enum class Kind { kConst, kNext, kLast };
  Kind kind = Kind::kConst;
  int value = 0;
  friend bool operator==(const HeaderIndex&, const HeaderIndex&) = default;
};

struct IntLit {
  ConstExpr value;
  friend bool operator==(const IntLit&, const IntLit&) = default;
};

struct BoolLit {
  bool value = false;
  friend bool operator==(const BoolLit&, const BoolLit&) = default;
};

// A bare name, optionally indexed: a parameter, instance, table, register...
struct NameExpr {
  std::string name;
  std::optional<HeaderIndex> index;
  friend bool operator==(const NameExpr&, const NameExpr&) = default;
};

struct FieldExpr {
  NameExpr instance;
  std::string field;
  friend bool operator==(const FieldExpr&, const FieldExpr&) = default;
};

struct ValidExpr {
  NameExpr instance;
  friend bool operator==(const ValidExpr&, const ValidExpr&) = default;
};

struct CurrentExpr {
  int offset = 0;
  int width = 0;
  friend bool operator==(const CurrentExpr&, const CurrentExpr&) = default;
};

struct LatestExpr {
  std::string field;
  friend bool operator==(const LatestExpr&, const LatestExpr&) = default;
};

struct UnaryExpr {
  UnOp op = UnOp::kNeg;
  Box<Expr> operand;
  friend bool operator==(const UnaryExpr&, const UnaryExpr&) = default;
};

struct BinaryExpr {
  BinOp op = BinOp::kAdd;
  Box<Expr> lhs;
  Box<Expr> rhs;
  friend bool operator==(const BinaryExpr&, const BinaryExpr&) = default;
};

struct Expr {
  std::variant<IntLit, BoolLit, NameExpr, FieldExpr, ValidExpr, CurrentExpr, LatestExpr,
               UnaryExpr, BinaryExpr>
      node;
  NodeSpan span;

  template <typename T>
  const T* as() const { return std::get_if<T>(&node); }
  friend bool operator==(const Expr&, const Expr&) = default;
};

// ---- declarations ---------------------------------------------------------

struct FieldDecl {
  std::string name;
  std::optional<int> width;  // nullopt: variable length (`*`)
  bool is_signed = false;
  bool saturating = false;
  NodeSpan span;
  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct HeaderTypeDecl {
  std::string name;
  std::vector<FieldDecl> fields;
  std::optional<Expr> length;
  std::optional<int> max_length;
  NodeSpan span;
  friend bool operator==(const HeaderTypeDecl&, const HeaderTypeDecl&) = default;
};

struct FieldInit {
  std::string field;
  Expr value;
  friend bool operator==(const FieldInit&, const FieldInit&) = default;
};

struct InstanceDecl {
  std::string type_name;
  std::string name;
  bool metadata = false;
  std::optional<int> stack_size;
  std::vector<FieldInit> initializer;
  NodeSpan span;
  friend bool operator==(const InstanceDecl&, const InstanceDecl&) = default;
};

struct FieldListEntry {
  bool payload = false;
  std::optional<Expr> expr;
  friend bool operator==(const FieldListEntry&, const FieldListEntry&) = default;
};

struct FieldListDecl {
  std::string name;
  std::vector<FieldListEntry> entries;
  NodeSpan span;
  friend bool operator==(const FieldListDecl&, const FieldListDecl&) = default;
};

struct FieldListCalcDecl {
  std::string name;
  std::vector<std::string> inputs;
  std::string algorithm;
  int output_width = 0;
  NodeSpan span;
  friend bool operator==(const FieldListCalcDecl&, const FieldListCalcDecl&) = default;
};

struct CalcBinding {
  bool verify = false;  // false: update
  std::string calculation;
  std::optional<Expr> condition;
  friend bool operator==(const CalcBinding&, const CalcBinding&) = default;
};

struct CalculatedFieldDecl {
  FieldExpr field;
  std::vector<CalcBinding> bindings;
  NodeSpan span;
  friend bool operator==(const CalculatedFieldDecl&, const CalculatedFieldDecl&) = default;
};

struct ParserStmt {
  enum class Kind { kExtract, kSetMetadata };
  Kind kind = Kind::kExtract;
  Expr target;  // NameExpr for extract, FieldExpr for set_metadata
  std::optional<Expr> value;
  NodeSpan span;
  friend bool operator==(const ParserStmt&, const ParserStmt&) = default;
};

struct SelectValue {
  Expr value;
  std::optional<Expr> mask;
  friend bool operator==(const SelectValue&, const SelectValue&) = default;
};

struct SelectCase {
  bool is_default = false;
  std::vector<SelectValue> values;
  std::string target;
  NodeSpan span;
  friend bool operator==(const SelectCase&, const SelectCase&) = default;
};

struct ParserReturn {
  enum class Kind { kDirect, kSelect, kParseError };
  Kind kind = Kind::kDirect;
  std::string target;  // state, control, or exception name
  std::vector<Expr> keys;
  std::vector<SelectCase> cases;
  NodeSpan span;
  friend bool operator==(const ParserReturn&, const ParserReturn&) = default;
};

struct ParserStateDecl {
  std::string name;
  std::vector<ParserStmt> stmts;
  ParserReturn ret;
  NodeSpan span;
  friend bool operator==(const ParserStateDecl&, const ParserStateDecl&) = default;
};

struct ParserExceptionDecl {
  std::string name;
  std::vector<ParserStmt> stmts;
  bool drop = false;
  std::string target;  // control to continue in, unless drop
  NodeSpan span;
  friend bool operator==(const ParserExceptionDecl&, const ParserExceptionDecl&) = default;
};

// Binding of a stateful element to a table (direct) or to the tables that may
// index it (static).
struct StatefulBinding {
  enum class Kind { kNone, kDirect, kStatic };
  Kind kind = Kind::kNone;
  std::string table;
  friend bool operator==(const StatefulBinding&, const StatefulBinding&) = default;
};

struct CounterDecl {
  std::string name;
  std::string type;  // packets | bytes | packets_and_bytes
  StatefulBinding binding;
  std::optional<int> instance_count;
  std::optional<int> min_width;
  bool saturating = false;
  NodeSpan span;
  friend bool operator==(const CounterDecl&, const CounterDecl&) = default;
};

struct MeterDecl {
  std::string name;
  std::string type;  // packets | bytes
  StatefulBinding binding;
  std::optional<FieldExpr> result;
  std::optional<int> instance_count;
  NodeSpan span;
  friend bool operator==(const MeterDecl&, const MeterDecl&) = default;
};

struct RegisterDecl {
  std::string name;
  int width = 0;
  StatefulBinding binding;
  std::optional<int> instance_count;
  bool is_signed = false;
  bool saturating = false;
  NodeSpan span;
  friend bool operator==(const RegisterDecl&, const RegisterDecl&) = default;
};

struct ActionCall {
  std::string name;
  std::vector<Expr> args;
  NodeSpan span;
  friend bool operator==(const ActionCall&, const ActionCall&) = default;
};

struct ActionDecl {
  std::string name;
  std::vector<std::string> params;
  std::vector<ActionCall> body;
  NodeSpan span;
  friend bool operator==(const ActionDecl&, const ActionDecl&) = default;
};

struct TableRead {
  Expr target;  // FieldExpr, or NameExpr for `valid` reads of a whole instance
  std::string match_kind;
  std::optional<Expr> mask;
  friend bool operator==(const TableRead&, const TableRead&) = default;
};

struct TableDecl {
  std::string name;
  std::vector<TableRead> reads;
  std::vector<std::string> actions;
  std::optional<int> min_size;
  std::optional<int> max_size;
  std::optional<int> size;
  std::optional<bool> support_timeout;
  NodeSpan span;
  friend bool operator==(const TableDecl&, const TableDecl&) = default;
};

struct ControlBlock;

struct ApplyCase {
  std::string label;  // hit | miss | <action name> | default
  Box<ControlBlock> body;
  friend bool operator==(const ApplyCase&, const ApplyCase&) = default;
};

struct ApplyStmt {
  enum class CaseKind { kNone, kHitMiss, kAction };
  std::string table;
  CaseKind case_kind = CaseKind::kNone;
  std::vector<ApplyCase> cases;
  friend bool operator==(const ApplyStmt&, const ApplyStmt&) = default;
};

struct IfStmt {
  Expr condition;
  Box<ControlBlock> then_block;
  std::optional<Box<ControlBlock>> else_block;
  friend bool operator==(const IfStmt&, const IfStmt&) = default;
};

struct CallStmt {
  std::string control;
  friend bool operator==(const CallStmt&, const CallStmt&) = default;
};

struct ControlStmt {
  std::variant<ApplyStmt, IfStmt, CallStmt> node;
  NodeSpan span;
  friend bool operator==(const ControlStmt&, const ControlStmt&) = default;
};

struct ControlBlock {
  std::vector<ControlStmt> stmts;
  friend bool operator==(const ControlBlock&, const ControlBlock&) = default;
};

struct ControlDecl {
  std::string name;
  ControlBlock body;
  NodeSpan span;
  friend bool operator==(const ControlDecl&, const ControlDecl&) = default;
};

using Declaration =
    std::variant<HeaderTypeDecl, InstanceDecl, FieldListDecl, FieldListCalcDecl,
                 CalculatedFieldDecl, ParserStateDecl, ParserExceptionDecl, CounterDecl,
                 MeterDecl, RegisterDecl, ActionDecl, TableDecl, ControlDecl>;

struct SyntaxTree {
  std::vector<Declaration> decls;
  friend bool operator==(const SyntaxTree&, const SyntaxTree&) = default;
};

// Declaration kind name as written in source ("header_type", "parser", ...).
std::string_view declaration_keyword(const Declaration& decl);

}  // namespace p4sem::ast

#endif  // P4SEM_FRONTEND_AST_H_
