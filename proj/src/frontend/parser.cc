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


#include "p4sem/frontend/parser.h"

#include <string>

#include "p4sem/common/error.h"

namespace p4sem {

namespace ast {

std::string_view declaration_keyword(const Declaration& decl) {
  struct Visitor {
    std::string_view operator()(const HeaderTypeDecl&) const { return "header_type"; }
    std::string_view operator()(const InstanceDecl& d) const {
      return d.metadata ? "metadata" : "header";
    }
    std::string_view operator()(const FieldListDecl&) const { return "field_list"; }
    std::string_view operator()(const FieldListCalcDecl&) const {
      return "field_list_calculation";
    }
    std::string_view operator()(const CalculatedFieldDecl&) const { return "calculated_field"; }
    std::string_view operator()(const ParserStateDecl&) const { return "parser"; }
    std::string_view operator()(const ParserExceptionDecl&) const { return "parser_exception"; }
    std::string_view operator()(const CounterDecl&) const { return "counter"; }
    std::string_view operator()(const MeterDecl&) const { return "meter"; }
    std::string_view operator()(const RegisterDecl&) const { return "register"; }
    std::string_view operator()(const ActionDecl&) const { return "action"; }
    std::string_view operator()(const TableDecl&) const { return "table"; }
    std::string_view operator()(const ControlDecl&) const { return "control"; }
  };
  return std::visit(Visitor{}, decl);
}

}  // namespace ast

namespace {

using namespace ast;  // NOLINT

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::kEnd) {
      throw Error(ErrorCode::kParseError, "token stream must end with end-of-input");
    }
  }

  SyntaxTree program() {
    SyntaxTree tree;
    while (!at_end()) tree.decls.push_back(declaration());
    return tree;
  }

  Expr standalone_expression() {
    Expr e = expression();
    if (!at_end()) fail({"end-of-input"});
    return e;
  }

 private:
  // ---- token plumbing ----

  const Token& peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at_end() const { return peek().kind == TokenKind::kEnd; }
  const Token& take() {
    const Token& t = peek();
    if (!at_end()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::initializer_list<std::string_view> expected) const {
    std::string msg = "expected ";
    bool first = true;
    for (std::string_view e : expected) {
      if (!first) msg += " | ";
      msg += "'" + std::string(e) + "'";
      first = false;
    }
    const Token& t = peek();
    msg += ", found " + (t.kind == TokenKind::kEnd ? std::string("end-of-input")
                                                   : "'" + t.text + "'");
    throw Error(ErrorCode::kParseError, msg, t.span);
  }

  bool accept_punct(std::string_view p) {
    if (peek().is_punct(p)) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view w) {
    if (peek().is_word(w)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) fail({p});
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail({w});
  }

  std::string identifier() {
    if (peek().kind != TokenKind::kIdentifier) fail({"identifier"});
    return take().text;
  }

  // Field names may collide with a few reserved words (e.g. `meta.valid`).
  std::string field_name() {
    if (peek().kind == TokenKind::kIdentifier || peek().is_word("valid")) return take().text;
    fail({"field name"});
  }

  int integer() {
    const Token& t = peek();
    if (t.kind != TokenKind::kInteger && t.kind != TokenKind::kWidthInteger) fail({"integer"});
    take();
    if (t.value > 1'000'000'000) throw Error(ErrorCode::kParseError, "integer too large", t.span);
    return static_cast<int>(t.value);
  }

  NodeSpan here() const { return NodeSpan{peek().span}; }

  // ---- declarations ----

  Declaration declaration() {
    const Token& t = peek();
    if (t.is_word("header_type")) return header_type();
    if (t.is_word("header") || t.is_word("metadata")) return instance();
    if (t.is_word("field_list")) return field_list();
    if (t.is_word("field_list_calculation")) return field_list_calc();
    if (t.is_word("calculated_field")) return calculated_field();
    if (t.is_word("parser")) return parser_state();
    if (t.is_word("parser_exception")) return parser_exception();
    if (t.is_word("counter")) return counter();
    if (t.is_word("meter")) return meter();
    if (t.is_word("register")) return reg();
    if (t.is_word("action")) return action();
    if (t.is_word("table")) return table();
    if (t.is_word("control")) return control();
    fail({"header_type", "header", "metadata", "field_list", "field_list_calculation",
          "calculated_field", "parser", "parser_exception", "counter", "meter", "register",
          "action", "table", "control"});
  }

  HeaderTypeDecl header_type() {
    HeaderTypeDecl d;
    d.span = here();
    expect_word("header_type");
    d.name = identifier();
    expect_punct("{");
    expect_word("fields");
    expect_punct("{");
    while (!accept_punct("}")) {
      FieldDecl f;
      f.span = here();
      f.name = field_name();
      expect_punct(":");
      if (accept_punct("*")) {
        f.width.reset();
      } else {
        f.width = integer();
      }
      if (accept_punct("(")) {
        do {
          if (accept_word("signed")) {
            f.is_signed = true;
          } else if (accept_word("saturating")) {
            f.saturating = true;
          } else {
            fail({"signed", "saturating"});
          }
        } while (accept_punct(","));
        expect_punct(")");
      }
      expect_punct(";");
      d.fields.push_back(std::move(f));
    }
    for (;;) {
      if (accept_word("length")) {
        expect_punct(":");
        d.length = expression();
        expect_punct(";");
      } else if (accept_word("max_length")) {
        expect_punct(":");
        d.max_length = integer();
        expect_punct(";");
      } else {
        break;
      }
    }
    expect_punct("}");
    return d;
  }

  InstanceDecl instance() {
    InstanceDecl d;
    d.span = here();
    d.metadata = peek().is_word("metadata");
    take();
    d.type_name = identifier();
    d.name = identifier();
    if (!d.metadata && accept_punct("[")) {
      d.stack_size = integer();
      expect_punct("]");
    }
    if (d.metadata && accept_punct("{")) {
      while (!accept_punct("}")) {
        FieldInit init;
        init.field = field_name();
        expect_punct(":");
        init.value = expression();
        expect_punct(";");
        d.initializer.push_back(std::move(init));
      }
    }
    expect_punct(";");
    return d;
  }

  FieldListDecl field_list() {
    FieldListDecl d;
    d.span = here();
    expect_word("field_list");
    d.name = identifier();
    expect_punct("{");
    while (!accept_punct("}")) {
      FieldListEntry e;
      if (accept_word("payload")) {
        e.payload = true;
      } else {
        e.expr = expression();
      }
      expect_punct(";");
      d.entries.push_back(std::move(e));
    }
    return d;
  }

  FieldListCalcDecl field_list_calc() {
    FieldListCalcDecl d;
    d.span = here();
    expect_word("field_list_calculation");
    d.name = identifier();
    expect_punct("{");
    expect_word("input");
    expect_punct("{");
    while (!accept_punct("}")) {
      d.inputs.push_back(identifier());
      expect_punct(";");
    }
    expect_word("algorithm");
    expect_punct(":");
    d.algorithm = identifier();
    expect_punct(";");
    expect_word("output_width");
    expect_punct(":");
    d.output_width = integer();
    expect_punct(";");
    expect_punct("}");
    return d;
  }

  FieldExpr field_ref() {
    FieldExpr f;
    f.instance = name_expr();
    expect_punct(".");
    f.field = field_name();
    return f;
  }

  CalculatedFieldDecl calculated_field() {
    CalculatedFieldDecl d;
    d.span = here();
    expect_word("calculated_field");
    d.field = field_ref();
    expect_punct("{");
    while (!accept_punct("}")) {
      CalcBinding b;
      if (accept_word("verify")) {
        b.verify = true;
      } else if (accept_word("update")) {
        b.verify = false;
      } else {
        fail({"verify", "update"});
      }
      b.calculation = identifier();
      if (accept_word("if")) {
        expect_punct("(");
        b.condition = expression();
        expect_punct(")");
      }
      expect_punct(";");
      d.bindings.push_back(std::move(b));
    }
    return d;
  }

  ParserStmt parser_stmt() {
    ParserStmt s;
    s.span = here();
    if (accept_word("extract")) {
      s.kind = ParserStmt::Kind::kExtract;
      expect_punct("(");
      Expr e;
      e.span = here();
      e.node = name_expr();
      s.target = std::move(e);
      expect_punct(")");
    } else {
      expect_word("set_metadata");
      s.kind = ParserStmt::Kind::kSetMetadata;
      expect_punct("(");
      Expr e;
      e.span = here();
      e.node = field_ref();
      s.target = std::move(e);
      expect_punct(",");
      s.value = expression();
      expect_punct(")");
    }
    expect_punct(";");
    return s;
  }

  ParserStateDecl parser_state() {
    ParserStateDecl d;
    d.span = here();
    expect_word("parser");
    d.name = identifier();
    expect_punct("{");
    while (peek().is_word("extract") || peek().is_word("set_metadata")) {
      d.stmts.push_back(parser_stmt());
    }
    d.ret.span = here();
    if (accept_word("parse_error")) {
      d.ret.kind = ParserReturn::Kind::kParseError;
      d.ret.target = identifier();
      expect_punct(";");
    } else {
      expect_word("return");
      if (accept_word("select")) {
        d.ret.kind = ParserReturn::Kind::kSelect;
        expect_punct("(");
        do {
          d.ret.keys.push_back(expression());
        } while (accept_punct(","));
        expect_punct(")");
        expect_punct("{");
        while (!accept_punct("}")) d.ret.cases.push_back(select_case());
      } else {
        d.ret.kind = ParserReturn::Kind::kDirect;
        d.ret.target = identifier();
        expect_punct(";");
      }
    }
    expect_punct("}");
    return d;
  }

  SelectCase select_case() {
    SelectCase c;
    c.span = here();
    if (accept_word("default")) {
      c.is_default = true;
    } else {
      do {
        SelectValue v;
        v.value = expression();
        if (accept_word("mask")) v.mask = expression();
        c.values.push_back(std::move(v));
      } while (accept_punct(","));
    }
    expect_punct(":");
    c.target = identifier();
    expect_punct(";");
    return c;
  }

  ParserExceptionDecl parser_exception() {
    ParserExceptionDecl d;
    d.span = here();
    expect_word("parser_exception");
    d.name = identifier();
    expect_punct("{");
    while (peek().is_word("set_metadata")) d.stmts.push_back(parser_stmt());
    if (accept_word("parser_drop")) {
      d.drop = true;
    } else {
      expect_word("return");
      d.target = identifier();
    }
    expect_punct(";");
    expect_punct("}");
    return d;
  }

  bool binding_attr(StatefulBinding* b) {
    if (accept_word("direct")) {
      b->kind = StatefulBinding::Kind::kDirect;
    } else if (accept_word("static")) {
      b->kind = StatefulBinding::Kind::kStatic;
    } else {
      return false;
    }
    expect_punct(":");
    b->table = identifier();
    expect_punct(";");
    return true;
  }

  CounterDecl counter() {
    CounterDecl d;
    d.span = here();
    expect_word("counter");
    d.name = identifier();
    expect_punct("{");
    while (!accept_punct("}")) {
      if (binding_attr(&d.binding)) continue;
      if (accept_word("type")) {
        expect_punct(":");
        d.type = identifier();
      } else if (accept_word("instance_count")) {
        expect_punct(":");
        d.instance_count = integer();
      } else if (accept_word("min_width")) {
        expect_punct(":");
        d.min_width = integer();
      } else if (accept_word("saturating")) {
        d.saturating = true;
      } else {
        fail({"type", "direct", "static", "instance_count", "min_width", "saturating", "}"});
      }
      expect_punct(";");
    }
    return d;
  }

  MeterDecl meter() {
    MeterDecl d;
    d.span = here();
    expect_word("meter");
    d.name = identifier();
    expect_punct("{");
    while (!accept_punct("}")) {
      if (binding_attr(&d.binding)) continue;
      if (accept_word("type")) {
        expect_punct(":");
        d.type = identifier();
      } else if (accept_word("result")) {
        expect_punct(":");
        d.result = field_ref();
      } else if (accept_word("instance_count")) {
        expect_punct(":");
        d.instance_count = integer();
      } else {
        fail({"type", "direct", "static", "result", "instance_count", "}"});
      }
      expect_punct(";");
    }
    return d;
  }

  RegisterDecl reg() {
    RegisterDecl d;
    d.span = here();
    expect_word("register");
    d.name = identifier();
    expect_punct("{");
    while (!accept_punct("}")) {
      if (binding_attr(&d.binding)) continue;
      if (accept_word("width")) {
        expect_punct(":");
        d.width = integer();
      } else if (accept_word("instance_count")) {
        expect_punct(":");
        d.instance_count = integer();
      } else if (accept_word("attributes")) {
        expect_punct(":");
        do {
          if (accept_word("signed")) {
            d.is_signed = true;
          } else if (accept_word("saturating")) {
            d.saturating = true;
          } else {
            fail({"signed", "saturating"});
          }
        } while (accept_punct(","));
      } else {
        fail({"width", "direct", "static", "instance_count", "attributes", "}"});
      }
      expect_punct(";");
    }
    return d;
  }

  ActionDecl action() {
    ActionDecl d;
    d.span = here();
    expect_word("action");
    d.name = identifier();
    expect_punct("(");
    if (!accept_punct(")")) {
      do {
        d.params.push_back(identifier());
      } while (accept_punct(","));
      expect_punct(")");
    }
    expect_punct("{");
    while (!accept_punct("}")) {
      ActionCall c;
      c.span = here();
      c.name = identifier();
      expect_punct("(");
      if (!accept_punct(")")) {
        do {
          c.args.push_back(expression());
        } while (accept_punct(","));
        expect_punct(")");
      }
      expect_punct(";");
      d.body.push_back(std::move(c));
    }
    return d;
  }

  TableDecl table() {
    TableDecl d;
    d.span = here();
    expect_word("table");
    d.name = identifier();
    expect_punct("{");
    bool saw_actions = false;
    while (!accept_punct("}")) {
      if (accept_word("reads")) {
        expect_punct("{");
        while (!accept_punct("}")) {
          TableRead r;
          r.target = primary();
          expect_punct(":");
          if (peek().is_word("valid")) {
            take();
            r.match_kind = "valid";
          } else {
            r.match_kind = identifier();
          }
          if (accept_word("mask")) r.mask = expression();
          expect_punct(";");
          d.reads.push_back(std::move(r));
        }
      } else if (accept_word("actions")) {
        saw_actions = true;
        expect_punct("{");
        while (!accept_punct("}")) {
          d.actions.push_back(identifier());
          expect_punct(";");
        }
      } else if (accept_word("min_size")) {
        expect_punct(":");
        d.min_size = integer();
        expect_punct(";");
      } else if (accept_word("max_size")) {
        expect_punct(":");
        d.max_size = integer();
        expect_punct(";");
      } else if (accept_word("size")) {
        expect_punct(":");
        d.size = integer();
        expect_punct(";");
      } else if (accept_word("support_timeout")) {
        expect_punct(":");
        if (accept_word("true")) {
          d.support_timeout = true;
        } else {
          expect_word("false");
          d.support_timeout = false;
        }
        expect_punct(";");
      } else {
        fail({"reads", "actions", "min_size", "max_size", "size", "support_timeout", "}"});
      }
    }
    if (!saw_actions) fail({"actions"});
    return d;
  }

  ControlBlock block() {
    ControlBlock b;
    expect_punct("{");
    while (!accept_punct("}")) b.stmts.push_back(control_stmt());
    return b;
  }

  ControlStmt control_stmt() {
    ControlStmt s;
    s.span = here();
    if (accept_word("apply")) {
      ApplyStmt a;
      expect_punct("(");
      a.table = identifier();
      expect_punct(")");
      if (peek().is_punct("{")) {
        take();
        while (!accept_punct("}")) {
          ApplyCase c;
          if (peek().is_word("hit") || peek().is_word("miss")) {
            if (a.case_kind == ApplyStmt::CaseKind::kAction) fail({"action name", "default"});
            a.case_kind = ApplyStmt::CaseKind::kHitMiss;
            c.label = take().text;
          } else if (peek().is_word("default") || peek().kind == TokenKind::kIdentifier) {
            if (a.case_kind == ApplyStmt::CaseKind::kHitMiss) fail({"hit", "miss"});
            a.case_kind = ApplyStmt::CaseKind::kAction;
            c.label = take().text;
          } else {
            fail({"hit", "miss", "action name", "default", "}"});
          }
          c.body = block();
          a.cases.push_back(std::move(c));
        }
      } else {
        expect_punct(";");
      }
      s.node = std::move(a);
    } else if (accept_word("if")) {
      IfStmt i;
      expect_punct("(");
      i.condition = expression();
      expect_punct(")");
      i.then_block = block();
      if (accept_word("else")) {
        if (peek().is_word("if")) {
          ControlBlock nested;
          nested.stmts.push_back(control_stmt());
          i.else_block = Box<ControlBlock>(std::move(nested));
        } else {
          i.else_block = Box<ControlBlock>(block());
        }
      }
      s.node = std::move(i);
    } else if (peek().kind == TokenKind::kIdentifier) {
      CallStmt c;
      c.control = take().text;
      expect_punct("(");
      expect_punct(")");
      expect_punct(";");
      s.node = std::move(c);
    } else {
      fail({"apply", "if", "control name", "}"});
    }
    return s;
  }

  ControlDecl control() {
    ControlDecl d;
    d.span = here();
    expect_word("control");
    d.name = identifier();
    d.body = block();
    return d;
  }

  // ---- expressions ----
  // Precedence (low to high): or, and, not, comparison, |, ^, &, shifts,
  // additive, multiplicative, unary.

  Expr make_binary(BinOp op, Expr lhs, Expr rhs, NodeSpan span) {
    Expr e;
    e.span = span;
    e.node = BinaryExpr{op, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))};
    return e;
  }

  Expr expression() { return or_expr(); }

  Expr or_expr() {
    Expr lhs = and_expr();
    while (peek().is_word("or") || peek().is_punct("||")) {
      NodeSpan sp = here();
      take();
      lhs = make_binary(BinOp::kLOr, std::move(lhs), and_expr(), sp);
    }
    return lhs;
  }

  Expr and_expr() {
    Expr lhs = not_expr();
    while (peek().is_word("and") || peek().is_punct("&&")) {
      NodeSpan sp = here();
      take();
      lhs = make_binary(BinOp::kLAnd, std::move(lhs), not_expr(), sp);
    }
    return lhs;
  }

  Expr not_expr() {
    if (peek().is_word("not")) {
      NodeSpan sp = here();
      take();
      Expr e;
      e.span = sp;
      e.node = UnaryExpr{UnOp::kLNot, Box<Expr>(not_expr())};
      return e;
    }
    return comparison();
  }

  Expr comparison() {
    Expr lhs = bit_or();
    for (;;) {
      BinOp op;
      if (peek().is_punct("==")) {
        op = BinOp::kEq;
      } else if (peek().is_punct("!=")) {
        op = BinOp::kNe;
      } else if (peek().is_punct("<")) {
        op = BinOp::kLt;
      } else if (peek().is_punct("<=")) {
        op = BinOp::kLe;
      } else if (peek().is_punct(">")) {
        op = BinOp::kGt;
      } else if (peek().is_punct(">=")) {
        op = BinOp::kGe;
      } else {
        return lhs;
      }
      NodeSpan sp = here();
      take();
      lhs = make_binary(op, std::move(lhs), bit_or(), sp);
    }
  }

  Expr bit_or() {
    Expr lhs = bit_xor();
    while (peek().is_punct("|")) {
      NodeSpan sp = here();
      take();
      lhs = make_binary(BinOp::kOr, std::move(lhs), bit_xor(), sp);
    }
    return lhs;
  }

  Expr bit_xor() {
    Expr lhs = bit_and();
    while (peek().is_punct("^")) {
      NodeSpan sp = here();
      take();
      lhs = make_binary(BinOp::kXor, std::move(lhs), bit_and(), sp);
    }
    return lhs;
  }

  Expr bit_and() {
    Expr lhs = shift();
    while (peek().is_punct("&")) {
      NodeSpan sp = here();
      take();
      lhs = make_binary(BinOp::kAnd, std::move(lhs), shift(), sp);
    }
    return lhs;
  }

  Expr shift() {
    Expr lhs = additive();
    while (peek().is_punct("<<") || peek().is_punct(">>")) {
      NodeSpan sp = here();
      BinOp op = take().text == "<<" ? BinOp::kShl : BinOp::kShr;
      lhs = make_binary(op, std::move(lhs), additive(), sp);
    }
    return lhs;
  }

  Expr additive() {
    Expr lhs = multiplicative();
    while (peek().is_punct("+") || peek().is_punct("-")) {
      NodeSpan sp = here();
      BinOp op = take().text == "+" ? BinOp::kAdd : BinOp::kSub;
      lhs = make_binary(op, std::move(lhs), multiplicative(), sp);
    }
    return lhs;
  }

  Expr multiplicative() {
    Expr lhs = unary();
    while (peek().is_punct("*")) {
      NodeSpan sp = here();
      take();
      lhs = make_binary(BinOp::kMul, std::move(lhs), unary(), sp);
    }
    return lhs;
  }

  Expr unary() {
    NodeSpan sp = here();
    if (peek().is_punct("-")) {
      take();
      const Token& next = peek();
      if (next.kind == TokenKind::kInteger || next.kind == TokenKind::kWidthInteger) {
        take();
        Expr e;
        e.span = sp;
        e.node = IntLit{ConstExpr{next.value, next.width, ConstSign::kNegativeLiteral}};
        return e;
      }
      Expr e;
      e.span = sp;
      e.node = UnaryExpr{UnOp::kNeg, Box<Expr>(unary())};
      return e;
    }
    if (peek().is_punct("+")) {
      take();
      return unary();
    }
    if (peek().is_punct("~")) {
      take();
      Expr e;
      e.span = sp;
      e.node = UnaryExpr{UnOp::kBitNot, Box<Expr>(unary())};
      return e;
    }
    return primary();
  }

  NameExpr name_expr() {
    NameExpr n;
    n.name = identifier();
    if (accept_punct("[")) {
      HeaderIndex idx;
      if (accept_word("next")) {
        idx.kind = HeaderIndex::Kind::kNext;
      } else if (accept_word("last")) {
        idx.kind = HeaderIndex::Kind::kLast;
      } else {
        idx.kind = HeaderIndex::Kind::kConst;
        idx.value = integer();
      }
      expect_punct("]");
      n.index = idx;
    }
    return n;
  }

  Expr primary() {
    Expr e;
    e.span = here();
    const Token& t = peek();
    if (t.kind == TokenKind::kInteger || t.kind == TokenKind::kWidthInteger) {
      take();
      e.node = IntLit{ConstExpr{t.value, t.width, ConstSign::kPlain}};
      return e;
    }
    if (accept_punct("(")) {
      Expr inner = expression();
      expect_punct(")");
      return inner;
    }
    if (accept_word("valid")) {
      expect_punct("(");
      e.node = ValidExpr{name_expr()};
      expect_punct(")");
      return e;
    }
    if (accept_word("current")) {
      expect_punct("(");
      CurrentExpr c;
      c.offset = integer();
      expect_punct(",");
      c.width = integer();
      expect_punct(")");
      e.node = c;
      return e;
    }
    if (accept_word("latest")) {
      expect_punct(".");
      e.node = LatestExpr{field_name()};
      return e;
    }
    if (t.is_word("true") || t.is_word("false")) {
      take();
      e.node = BoolLit{t.text == "true"};
      return e;
    }
    if (t.kind == TokenKind::kIdentifier) {
      NameExpr n = name_expr();
      if (accept_punct(".")) {
        e.node = FieldExpr{std::move(n), field_name()};
      } else {
        e.node = std::move(n);
      }
      return e;
    }
    fail({"expression"});
  }

  std::span<const Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

ast::SyntaxTree parse_program(std::span<const Token> tokens) {
  return Parser(tokens).program();
}

ast::SyntaxTree parse_source(std::string_view source) {
  std::vector<Token> tokens = tokenize(source);
  return parse_program(tokens);
}

ast::Expr parse_expression(std::string_view source) {
  std::vector<Token> tokens = tokenize(source);
  return Parser(tokens).standalone_expression();
}

MinusReading classify_minus(const ast::Expr& expr) {
  if (const auto* lit = expr.as<ast::IntLit>()) {
    return lit->value.sign == ConstSign::kNegativeLiteral ? MinusReading::kNegativeLiteral
                                                          : MinusReading::kNone;
  }
  if (const auto* u = expr.as<ast::UnaryExpr>()) {
    return u->op == UnOp::kNeg ? MinusReading::kUnaryNegation : MinusReading::kNone;
  }
  if (const auto* b = expr.as<ast::BinaryExpr>()) {
    return b->op == BinOp::kSub ? MinusReading::kSubtraction : MinusReading::kNone;
  }
  return MinusReading::kNone;
}

}  // namespace p4sem
