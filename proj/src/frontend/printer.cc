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


#include "p4sem/frontend/printer.h"

#include <sstream>

namespace p4sem {

namespace {

using namespace ast;  // NOLINT

std::string print_int(const ConstExpr& c) {
  std::string digits = c.magnitude.str();
  if (c.width) digits = std::to_string(*c.width) + "w" + digits;
  return c.sign == ConstSign::kNegativeLiteral ? "-" + digits : digits;
}

class Printer {
 public:
  std::string str() const { return out_.str(); }

  void decl(const Declaration& d) {
    std::visit([this](const auto& x) { print(x); }, d);
    out_ << "\n";
  }

 private:
  void line(int depth, const std::string& text) {
    out_ << std::string(depth * 2, ' ') << text << "\n";
  }

  void print(const HeaderTypeDecl& d) {
    line(0, "header_type " + d.name + " {");
    line(1, "fields {");
    for (const FieldDecl& f : d.fields) {
      std::string s = f.name + " : " + (f.width ? std::to_string(*f.width) : "*");
      if (f.is_signed || f.saturating) {
        s += " (";
        if (f.is_signed) s += "signed";
        if (f.is_signed && f.saturating) s += ", ";
        if (f.saturating) s += "saturating";
        s += ")";
      }
      line(2, s + ";");
    }
    line(1, "}");
    if (d.length) line(1, "length : " + print_expression(*d.length) + ";");
    if (d.max_length) line(1, "max_length : " + std::to_string(*d.max_length) + ";");
    line(0, "}");
  }

  void print(const InstanceDecl& d) {
    std::string s = (d.metadata ? "metadata " : "header ") + d.type_name + " " + d.name;
    if (d.stack_size) s += "[" + std::to_string(*d.stack_size) + "]";
    if (!d.initializer.empty()) {
      line(0, s + " {");
      for (const FieldInit& i : d.initializer) {
        line(1, i.field + " : " + print_expression(i.value) + ";");
      }
      line(0, "};");
    } else {
      line(0, s + ";");
    }
  }

  void print(const FieldListDecl& d) {
    line(0, "field_list " + d.name + " {");
    for (const FieldListEntry& e : d.entries) {
      line(1, (e.payload ? std::string("payload") : print_expression(*e.expr)) + ";");
    }
    line(0, "}");
  }

  void print(const FieldListCalcDecl& d) {
    line(0, "field_list_calculation " + d.name + " {");
    line(1, "input {");
    for (const std::string& i : d.inputs) line(2, i + ";");
    line(1, "}");
    line(1, "algorithm : " + d.algorithm + ";");
    line(1, "output_width : " + std::to_string(d.output_width) + ";");
    line(0, "}");
  }

  void print(const CalculatedFieldDecl& d) {
    line(0, "calculated_field " + print_field(d.field) + " {");
    for (const CalcBinding& b : d.bindings) {
      std::string s = (b.verify ? "verify " : "update ") + b.calculation;
      if (b.condition) s += " if (" + print_expression(*b.condition) + ")";
      line(1, s + ";");
    }
    line(0, "}");
  }

  std::string stmt(const ParserStmt& s) {
    if (s.kind == ParserStmt::Kind::kExtract) {
      return "extract(" + print_expression(s.target) + ");";
    }
    return "set_metadata(" + print_expression(s.target) + ", " + print_expression(*s.value) +
           ");";
  }

  void print(const ParserStateDecl& d) {
    line(0, "parser " + d.name + " {");
    for (const ParserStmt& s : d.stmts) line(1, stmt(s));
    const ParserReturn& r = d.ret;
    switch (r.kind) {
      case ParserReturn::Kind::kDirect:
        line(1, "return " + r.target + ";");
        break;
      case ParserReturn::Kind::kParseError:
        line(1, "parse_error " + r.target + ";");
        break;
      case ParserReturn::Kind::kSelect: {
        std::string keys;
        for (size_t i = 0; i < r.keys.size(); ++i) {
          if (i) keys += ", ";
          keys += print_expression(r.keys[i]);
        }
        line(1, "return select(" + keys + ") {");
        for (const SelectCase& c : r.cases) {
          std::string s;
          if (c.is_default) {
            s = "default";
          } else {
            for (size_t i = 0; i < c.values.size(); ++i) {
              if (i) s += ", ";
              s += print_expression(c.values[i].value);
              if (c.values[i].mask) s += " mask " + print_expression(*c.values[i].mask);
            }
          }
          line(2, s + " : " + c.target + ";");
        }
        line(1, "}");
        break;
      }
    }
    line(0, "}");
  }

  void print(const ParserExceptionDecl& d) {
    line(0, "parser_exception " + d.name + " {");
    for (const ParserStmt& s : d.stmts) line(1, stmt(s));
    line(1, d.drop ? std::string("parser_drop;") : "return " + d.target + ";");
    line(0, "}");
  }

  void binding(const StatefulBinding& b) {
    if (b.kind == StatefulBinding::Kind::kDirect) line(1, "direct : " + b.table + ";");
    if (b.kind == StatefulBinding::Kind::kStatic) line(1, "static : " + b.table + ";");
  }

  void print(const CounterDecl& d) {
    line(0, "counter " + d.name + " {");
    line(1, "type : " + d.type + ";");
    binding(d.binding);
    if (d.instance_count) line(1, "instance_count : " + std::to_string(*d.instance_count) + ";");
    if (d.min_width) line(1, "min_width : " + std::to_string(*d.min_width) + ";");
    if (d.saturating) line(1, "saturating;");
    line(0, "}");
  }

  void print(const MeterDecl& d) {
    line(0, "meter " + d.name + " {");
    line(1, "type : " + d.type + ";");
    binding(d.binding);
    if (d.result) line(1, "result : " + print_field(*d.result) + ";");
    if (d.instance_count) line(1, "instance_count : " + std::to_string(*d.instance_count) + ";");
    line(0, "}");
  }

  void print(const RegisterDecl& d) {
    line(0, "register " + d.name + " {");
    line(1, "width : " + std::to_string(d.width) + ";");
    binding(d.binding);
    if (d.instance_count) line(1, "instance_count : " + std::to_string(*d.instance_count) + ";");
    if (d.is_signed || d.saturating) {
      std::string s = "attributes : ";
      if (d.is_signed) s += "signed";
      if (d.is_signed && d.saturating) s += ", ";
      if (d.saturating) s += "saturating";
      line(1, s + ";");
    }
    line(0, "}");
  }

  void print(const ActionDecl& d) {
    std::string params;
    for (size_t i = 0; i < d.params.size(); ++i) {
      if (i) params += ", ";
      params += d.params[i];
    }
    line(0, "action " + d.name + "(" + params + ") {");
    for (const ActionCall& c : d.body) {
      std::string args;
      for (size_t i = 0; i < c.args.size(); ++i) {
        if (i) args += ", ";
        args += print_expression(c.args[i]);
      }
      line(1, c.name + "(" + args + ");");
    }
    line(0, "}");
  }

  void print(const TableDecl& d) {
    line(0, "table " + d.name + " {");
    if (!d.reads.empty()) {
      line(1, "reads {");
      for (const TableRead& r : d.reads) {
        std::string s = print_expression(r.target) + " : " + r.match_kind;
        if (r.mask) s += " mask " + print_expression(*r.mask);
        line(2, s + ";");
      }
      line(1, "}");
    }
    line(1, "actions {");
    for (const std::string& a : d.actions) line(2, a + ";");
    line(1, "}");
    if (d.min_size) line(1, "min_size : " + std::to_string(*d.min_size) + ";");
    if (d.max_size) line(1, "max_size : " + std::to_string(*d.max_size) + ";");
    if (d.size) line(1, "size : " + std::to_string(*d.size) + ";");
    if (d.support_timeout) {
      line(1, std::string("support_timeout : ") + (*d.support_timeout ? "true" : "false") + ";");
    }
    line(0, "}");
  }

  void block(const ControlBlock& b, int depth) {
    for (const ControlStmt& s : b.stmts) control_stmt(s, depth);
  }

  void control_stmt(const ControlStmt& s, int depth) {
    if (const auto* a = std::get_if<ApplyStmt>(&s.node)) {
      if (a->case_kind == ApplyStmt::CaseKind::kNone) {
        line(depth, "apply(" + a->table + ");");
        return;
      }
      line(depth, "apply(" + a->table + ") {");
      for (const ApplyCase& c : a->cases) {
        line(depth + 1, c.label + " {");
        block(*c.body, depth + 2);
        line(depth + 1, "}");
      }
      line(depth, "}");
    } else if (const auto* i = std::get_if<IfStmt>(&s.node)) {
      line(depth, "if (" + print_expression(i->condition) + ") {");
      block(*i->then_block, depth + 1);
      if (i->else_block) {
        line(depth, "} else {");
        block(**i->else_block, depth + 1);
      }
      line(depth, "}");
    } else {
      line(depth, std::get<CallStmt>(s.node).control + "();");
    }
  }

  void print(const ControlDecl& d) {
    line(0, "control " + d.name + " {");
    block(d.body, 1);
    line(0, "}");
  }

  std::ostringstream out_;
};

}  // namespace

std::string print_name(const ast::NameExpr& name) {
  if (!name.index) return name.name;
  switch (name.index->kind) {
    case ast::HeaderIndex::Kind::kNext:
      return name.name + "[next]";
    case ast::HeaderIndex::Kind::kLast:
      return name.name + "[last]";
    case ast::HeaderIndex::Kind::kConst:
      break;
  }
  return name.name + "[" + std::to_string(name.index->value) + "]";
}

std::string print_field(const ast::FieldExpr& field) {
  return print_name(field.instance) + "." + field.field;
}

std::string print_expression(const ast::Expr& expr) {
  struct Visitor {
    std::string operator()(const IntLit& x) const { return print_int(x.value); }
    std::string operator()(const BoolLit& x) const { return x.value ? "true" : "false"; }
    std::string operator()(const NameExpr& x) const { return print_name(x); }
    std::string operator()(const FieldExpr& x) const { return print_field(x); }
    std::string operator()(const ValidExpr& x) const {
      return "valid(" + print_name(x.instance) + ")";
    }
    std::string operator()(const CurrentExpr& x) const {
      return "current(" + std::to_string(x.offset) + ", " + std::to_string(x.width) + ")";
    }
    std::string operator()(const LatestExpr& x) const { return "latest." + x.field; }
    std::string operator()(const UnaryExpr& x) const {
      std::string inner = "(" + print_expression(*x.operand) + ")";
      switch (x.op) {
        case UnOp::kNeg:
          return "-" + inner;
        case UnOp::kBitNot:
          return "~" + inner;
        case UnOp::kLNot:
          return "(not " + inner + ")";
      }
      return inner;
    }
    std::string operator()(const BinaryExpr& x) const {
      std::string sym(binop_symbol(x.op));
      if (x.op == BinOp::kLAnd) sym = "and";
      if (x.op == BinOp::kLOr) sym = "or";
      return "(" + print_expression(*x.lhs) + " " + sym + " " + print_expression(*x.rhs) + ")";
    }
  };
  return std::visit(Visitor{}, expr.node);
}

std::string print_program(const ast::SyntaxTree& tree) {
  Printer p;
  for (const ast::Declaration& d : tree.decls) p.decl(d);
  return p.str();
}

}  // namespace p4sem
