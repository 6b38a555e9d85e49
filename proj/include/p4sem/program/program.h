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


#ifndef P4SEM_PROGRAM_PROGRAM_H_
#define P4SEM_PROGRAM_PROGRAM_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "p4sem/common/box.h"
#include "p4sem/common/span.h"
#include "p4sem/frontend/ast.h"
#include "p4sem/program/primitives.h"
#include "p4sem/values/value.h"

namespace p4sem {

// ---- header types and instances --------------------------------------------

struct FieldInfo {
  std::string name;
  int width = 0;  // 0 for the variable-length field
  bool is_signed = false;
  bool saturating = false;
  bool varbit = false;
};

struct RExpr;

struct HeaderType {
  std::string name;
  std::vector<FieldInfo> fields;
  // Header length in bytes; present iff the type has a variable-length field.
  std::shared_ptr<const RExpr> length;
  std::optional<int> max_length;
  int fixed_width = 0;  // total width of the fixed fields
  int varbit_field = -1;

  int field_index(const std::string& name) const;
};

using InstanceId = int;

// One header instance, metadata instance or header-stack element.
struct InstanceInfo {
  std::string name;  // "ipv4", "mpls[1]"
  int type = -1;
  bool metadata = false;
  int stack = -1;  // owning stack, or -1
  int stack_index = -1;
  int decl_pos = 0;  // position of the declaring statement
  std::map<int, Value> initial;  // metadata initializer, by field index
};

struct StackInfo {
  std::string name;
  int type = -1;
  std::vector<InstanceId> elements;
};

// Static instance, or a stack element chosen at run time.
struct InstanceRef {
  enum class Kind { kStatic, kNext, kLast };
  Kind kind = Kind::kStatic;
  InstanceId id = -1;  // kStatic
  int stack = -1;      // kNext / kLast
};

// Field index of the `valid` pseudo-field (`meta.valid`), the validity bit
// read as a 1-bit value.
inline constexpr int kValidPseudoField = -2;

struct FieldRef {
  InstanceRef instance;
  int field = -1;
};

// ---- resolved expressions --------------------------------------------------

struct RExpr {
  enum class Kind {
    kConst,
    kField,
    kSelfField,  // field of the header whose length is being computed
    kValid,
    kParam,
    kCurrent,
    kLatest,
    kUnary,
    kBinary,
  };
  Kind kind = Kind::kConst;
  Value constant;
  FieldRef field;
  InstanceRef instance;  // kValid
  int index = 0;         // kParam: parameter; kSelfField: field index
  int offset = 0;        // kCurrent
  int width = 0;         // kCurrent
  std::string name;      // kLatest: field name
  UnOp unop = UnOp::kNeg;
  BinOp binop = BinOp::kAdd;
  std::shared_ptr<const RExpr> lhs;
  std::shared_ptr<const RExpr> rhs;
  SourceSpan span;
};

using RExprPtr = std::shared_ptr<const RExpr>;

// ---- field lists and calculations ------------------------------------------

struct FieldListItem {
  enum class Kind { kField, kInstance, kList, kConst };
  Kind kind = Kind::kField;
  FieldRef field;
  InstanceRef instance;
  int list = -1;
  Value constant;
};

struct FieldListInfo {
  std::string name;
  std::vector<FieldListItem> items;
};

// A flattened field list element: a field reference or a constant.
struct FlatItem {
  bool is_const = false;
  FieldRef field;
  Value constant;
};

enum class HashAlgorithm { kCsum16, kCrc16, kCrc32, kXor16, kIdentity };

struct CalculationInfo {
  std::string name;
  std::vector<int> inputs;  // field lists, concatenated in order
  HashAlgorithm algorithm = HashAlgorithm::kCsum16;
  int output_width = 0;
};

struct CalcBindingInfo {
  bool verify = false;
  InstanceId instance = -1;
  int field = -1;
  int calculation = -1;
  RExprPtr condition;  // may be null
  std::string site;    // "ipv4.hdrChecksum verify ipv4_checksum"
};

// ---- parser ------------------------------------------------------------------

struct ParserTarget {
  enum class Kind { kState, kControl, kException };
  Kind kind = Kind::kState;
  int id = -1;
  std::string name;
};

struct RParserStmt {
  bool extract = true;
  InstanceRef target;  // extract
  FieldRef field;      // set_metadata
  RExprPtr value;
  std::string site;
};

struct RSelectValue {
  BigInt value;
  BigInt mask;  // all ones when absent
};

struct RSelectCase {
  bool is_default = false;
  std::vector<RSelectValue> values;  // alternatives
  ParserTarget target;
};

struct ParserStateInfo {
  std::string name;
  std::vector<RParserStmt> stmts;
  ast::ParserReturn::Kind return_kind = ast::ParserReturn::Kind::kDirect;
  ParserTarget target;  // direct return / parse_error
  std::vector<RExprPtr> keys;
  std::vector<int> key_widths;
  int key_width = 0;
  std::vector<RSelectCase> cases;
};

struct ExceptionInfo {
  std::string name;
  std::vector<RParserStmt> stmts;
  bool drop = false;
  int control = -1;
};

// ---- statefuls ---------------------------------------------------------------

enum class StatefulKind { kCounter, kMeter, kRegister };

struct StatefulInfo {
  std::string name;
  StatefulKind kind = StatefulKind::kRegister;
  int width = 32;
  bool is_signed = false;
  bool bytes = false;  // counters and meters: byte type
  int direct_table = -1;
  int static_table = -1;
  std::optional<int> instance_count;
  std::optional<FieldRef> meter_result;
};

// ---- actions -----------------------------------------------------------------

struct RArg {
  ArgRole role = ArgRole::kValue;
  RExprPtr expr;          // value and field roles
  InstanceRef instance;   // instance role
  int id = -1;            // stack, field list, calculation, stateful
  bool param = false;     // bound to a parameter of the enclosing action
  int param_index = -1;
  std::string name_text;  // compound-action argument naming an object
};

struct RCall {
  std::string name;
  const PrimitiveSpec* primitive = nullptr;  // null: compound action or extern
  int action = -1;                           // -1 with null primitive: extern
  std::vector<RArg> args;
  std::string site;
};

struct ActionInfo {
  std::string name;
  std::vector<std::string> params;
  std::vector<RCall> body;
  bool from_primitive = false;  // primitive listed directly in a table
};

// ---- tables --------------------------------------------------------------------

enum class MatchKind { kExact, kTernary, kLpm, kRange, kValid };

std::string_view match_kind_name(MatchKind kind);

struct TableReadInfo {
  MatchKind kind = MatchKind::kExact;
  RExprPtr target;  // field; null for whole-instance valid reads
  InstanceRef instance;  // valid reads
  std::optional<BigInt> mask;
  int width = 1;
  std::string text;  // "ipv4.dstAddr"
};

struct TableInfo {
  std::string name;
  std::vector<TableReadInfo> reads;
  std::vector<int> actions;
  std::vector<int> direct_statefuls;  // binding order
  std::optional<int> size;
};

// ---- control flow ----------------------------------------------------------------

struct RStmt;

struct RBlock {
  std::vector<RStmt> stmts;
};

struct RApplyCase {
  std::string label;
  int action = -1;  // action cases; -1 for hit/miss/default
  Box<RBlock> body;
};

struct RStmt {
  enum class Kind { kApply, kIf, kCall };
  Kind kind = Kind::kApply;
  int table = -1;
  ast::ApplyStmt::CaseKind case_kind = ast::ApplyStmt::CaseKind::kNone;
  std::vector<RApplyCase> cases;
  RExprPtr condition;
  Box<RBlock> then_block;
  std::optional<Box<RBlock>> else_block;
  int control = -1;
  std::string site;
};

struct ControlInfo {
  std::string name;
  RBlock body;
};

// ---- parse graph and deparse orders -----------------------------------------------

struct ParseEdge {
  int from = -1;
  ParserTarget to;
  std::string condition;  // "always", "default", or the case values
  std::vector<std::string> extracted;  // in statement order, e.g. "mpls[next]"
};

struct ParseGraph {
  std::vector<std::string> states;
  std::vector<ParseEdge> edges;
  int start = -1;
};

// Deparse units are header instances, with each stack collapsed to one unit.
// `before[a][b]` holds when unit a precedes unit b in the transitive closure
// of the inferred precedence relation.
struct DeparseOrders {
  std::vector<std::string> units;
  std::vector<int> unit_decl_pos;
  std::vector<std::vector<bool>> direct;  // inferred precedence edges
  std::vector<std::vector<bool>> before;  // transitive closure
  std::vector<int> unit_of_instance;      // -1 for metadata

  // All topological orders over all units (exponential; for small programs).
  std::vector<std::vector<int>> all_orders(size_t limit = 100000) const;
  // Linear extensions of `before` restricted to `subset`, lexicographically
  // least by declaration position first.
  std::vector<std::vector<int>> orders_for(const std::vector<int>& subset,
                                           size_t limit = 100000) const;
  std::vector<int> canonical_order(const std::vector<int>& subset) const;
  std::string to_dot() const;
};

// ---- the program -------------------------------------------------------------------

struct Program {
  std::vector<HeaderType> header_types;
  std::vector<InstanceInfo> instances;
  std::vector<StackInfo> stacks;
  std::vector<FieldListInfo> field_lists;
  std::vector<CalculationInfo> calculations;
  std::vector<CalcBindingInfo> verify_bindings;  // source order
  std::vector<CalcBindingInfo> update_bindings;  // source order
  std::vector<ParserStateInfo> parser_states;
  std::vector<ExceptionInfo> exceptions;
  std::vector<StatefulInfo> statefuls;
  std::vector<ActionInfo> actions;
  std::vector<TableInfo> tables;
  std::vector<ControlInfo> controls;

  int start_state = -1;
  int ingress = -1;
  int egress = -1;
  InstanceId standard_metadata = -1;
  int default_exception = -1;    // p4_pe_default
  int unhandled_select = -1;     // p4_pe_unhandled_select

  ParseGraph parse_graph;
  DeparseOrders deparse;

  // Elaboration diagnostics that do not reject the program.
  std::vector<std::string> warnings;

  // Name lookups; return -1 when absent.
  InstanceId instance_id(const std::string& name) const;
  int stack_id(const std::string& name) const;
  int table_id(const std::string& name) const;
  int action_id(const std::string& name) const;
  int control_id(const std::string& name) const;
  int stateful_id(const std::string& name) const;
  int field_list_id(const std::string& name) const;
  int calculation_id(const std::string& name) const;
  int exception_id(const std::string& name) const;
  int state_id(const std::string& name) const;

  const HeaderType& type_of(InstanceId id) const { return header_types[instances[id].type]; }
  // Resolves "inst.field" (with optional stack index) to a static reference.
  bool resolve_field(const std::string& text, FieldRef* out) const;
  std::string field_text(const FieldRef& ref) const;
  std::string instance_text(const InstanceRef& ref) const;

  std::map<std::string, int> names;  // every declared name -> declaration kind tag
  std::map<std::string, InstanceId> instance_index;
  std::map<std::string, int> stack_index;
};

// Builds a resolved Program: name resolution, static checks, stack
// expansion, parse graph and deparse orders. Throws Error.
Program elaborate(const ast::SyntaxTree& tree);

// Convenience: parse_source + elaborate.
Program load_program_source(std::string_view source);
Program load_program_file(const std::string& path);

// Nested lists expand depth-first; whole instances expand to their fields.
// Throws Error(kFieldListCycle) on a reference cycle.
std::vector<FlatItem> flatten_field_list(const Program& program, int list);
std::vector<FlatItem> flatten_field_list(const Program& program, const std::string& name);

ParseGraph build_parse_graph(const Program& program);

// Throws Error(kDeparseOrderConflict) when precedence is cyclic.
DeparseOrders infer_deparse_orders(const Program& program, const ParseGraph& graph);

}  // namespace p4sem

#endif  // P4SEM_PROGRAM_PROGRAM_H_
