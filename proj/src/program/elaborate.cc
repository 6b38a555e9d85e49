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


#include <fstream>
#include <set>
#include <sstream>

#include "p4sem/common/error.h"
#include "p4sem/frontend/parser.h"
#include "p4sem/frontend/printer.h"
#include "p4sem/program/program.h"

namespace p4sem {

namespace {

using namespace ast;  // NOLINT

struct StdField {
  const char* name;
  int width;
  bool undef;
};

// Fields of the implicit standard_metadata instance.
constexpr StdField kStandardMetadata[] = {
    {"ingress_port", 9, false},      {"packet_length", 32, false},
    {"egress_spec", 9, true},        {"egress_port", 9, true},
    {"egress_instance", 16, false},  {"instance_type", 32, false},
    {"parser_status", 8, false},     {"parser_error_location", 8, false},
};

[[noreturn]] void fail(ErrorCode code, const std::string& msg, const NodeSpan& span) {
  throw Error(code, msg, span.at);
}

// Where an expression is being resolved.
struct ExprScope {
  const std::vector<std::string>* params = nullptr;
  int self_type = -1;       // header length expressions
  bool parser = false;      // latest / current allowed
  int latest_type = -1;     // type of the most recent static extraction
};

class Elaborator {
 public:
  explicit Elaborator(const SyntaxTree& tree) : tree_(tree) {}

  Program run() {
    declare_names();
    build_header_types();
    build_instances();
    build_field_lists();
    build_calculations();
    declare_tables_and_actions();
    build_statefuls();
    build_actions();
    build_tables();
    build_controls();
    build_parser();
    build_calculated_fields();
    for (size_t i = 0; i < p_.field_lists.size(); ++i) {
      flatten_field_list(p_, static_cast<int>(i));  // rejects reference cycles
    }
    check_identity_widths();
    p_.parse_graph = build_parse_graph(p_);
    p_.deparse = infer_deparse_orders(p_, p_.parse_graph);
    return std::move(p_);
  }

 private:
  // ---- names ----

  void declare(const std::string& name, const std::string& kind, const NodeSpan& span) {
    if (!kinds_.emplace(name, kind).second) {
      fail(ErrorCode::kDuplicateName, "duplicate declaration of '" + name + "'", span);
    }
    if (kind == "action" && find_primitive(name) != nullptr) {
      fail(ErrorCode::kDuplicateName, "action '" + name + "' shadows a primitive action", span);
    }
  }

  std::string kind_of(const std::string& name) const {
    auto it = kinds_.find(name);
    return it == kinds_.end() ? "" : it->second;
  }

  void declare_names() {
    bool user_std = false;
    for (const Declaration& d : tree_.decls) {
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            std::string kind(declaration_keyword(d));
            if constexpr (std::is_same_v<T, HeaderTypeDecl>) {
              // Header types live in their own namespace.
              if (!type_names_.insert(x.name).second) {
                fail(ErrorCode::kDuplicateName, "duplicate header_type '" + x.name + "'", x.span);
              }
              return;
            } else if constexpr (std::is_same_v<T, CalculatedFieldDecl>) {
              return;
            } else {
              if constexpr (std::is_same_v<T, InstanceDecl>) {
                kind = "instance";
                if (x.name == "standard_metadata") user_std = true;
              }
              declare(x.name, kind, x.span);
            }
          },
          d);
    }
    implicit_std_ = !user_std;
  }

  // ---- header types ----

  void build_header_types() {
    if (implicit_std_) {
      HeaderType t;
      t.name = "standard_metadata_t";
      for (const StdField& f : kStandardMetadata) {
        t.fields.push_back(FieldInfo{f.name, f.width, false, false, false});
        t.fixed_width += f.width;
      }
      if (type_names_.count(t.name)) {
        throw Error(ErrorCode::kDuplicateName, "standard_metadata_t is reserved");
      }
      p_.header_types.push_back(std::move(t));
    }
    for (const Declaration& d : tree_.decls) {
      const auto* h = std::get_if<HeaderTypeDecl>(&d);
      if (h == nullptr) continue;
      HeaderType t;
      t.name = h->name;
      std::set<std::string> seen;
      for (size_t i = 0; i < h->fields.size(); ++i) {
        const FieldDecl& f = h->fields[i];
        if (!seen.insert(f.name).second || f.name == "valid") {
          fail(ErrorCode::kDuplicateName, "duplicate field '" + f.name + "'", f.span);
        }
        FieldInfo info{f.name, f.width.value_or(0), f.is_signed, f.saturating, !f.width};
        if (f.saturating) saturating_warning(h->name + "." + f.name, f.span);
        if (info.varbit) {
          if (t.varbit_field >= 0 || i + 1 != h->fields.size()) {
            fail(ErrorCode::kVarbitMisplaced,
                 "variable-length field '" + f.name + "' must be the single last field", f.span);
          }
          t.varbit_field = static_cast<int>(i);
        } else if (info.width < 1) {
          fail(ErrorCode::kTypeError, "field '" + f.name + "' needs a positive width", f.span);
        } else {
          t.fixed_width += info.width;
        }
        t.fields.push_back(info);
      }
      t.max_length = h->max_length;
      p_.header_types.push_back(std::move(t));
      int type_id = static_cast<int>(p_.header_types.size()) - 1;
      if (h->length) {
        if (p_.header_types[type_id].varbit_field < 0) {
          // A fixed-size header may still state its length; it is not used.
          continue;
        }
        ExprScope scope;
        scope.self_type = type_id;
        RExprPtr len = resolve_expr(*h->length, scope);
        check_length_refs(*len, p_.header_types[type_id], h->span);
        p_.header_types[type_id].length = len;
      } else if (p_.header_types[type_id].varbit_field >= 0) {
        fail(ErrorCode::kVarbitMisplaced,
             "header_type '" + h->name + "' has a variable-length field but no length", h->span);
      }
    }
  }

  void check_length_refs(const RExpr& e, const HeaderType& t, const NodeSpan& span) {
    switch (e.kind) {
      case RExpr::Kind::kSelfField:
        if (e.index >= t.varbit_field) {
          fail(ErrorCode::kVarbitMisplaced,
               "length of '" + t.name + "' may only use fields before the variable-length field",
               span);
        }
        return;
      case RExpr::Kind::kConst:
        return;
      case RExpr::Kind::kUnary:
        check_length_refs(*e.lhs, t, span);
        return;
      case RExpr::Kind::kBinary:
        check_length_refs(*e.lhs, t, span);
        check_length_refs(*e.rhs, t, span);
        return;
      default:
        fail(ErrorCode::kVarbitMisplaced, "unsupported term in length of '" + t.name + "'",
             span);
    }
  }

  int type_id(const std::string& name, const NodeSpan& span) const {
    for (size_t i = 0; i < p_.header_types.size(); ++i) {
      if (p_.header_types[i].name == name) return static_cast<int>(i);
    }
    fail(ErrorCode::kUnresolvedName, "unknown header_type '" + name + "'", span);
  }

  // ---- instances ----

  void add_instance(InstanceInfo info) {
    p_.instance_index[info.name] = static_cast<int>(p_.instances.size());
    p_.instances.push_back(std::move(info));
  }

  void build_instances() {
    if (implicit_std_) {
      InstanceInfo std_meta;
      std_meta.name = "standard_metadata";
      std_meta.type = 0;
      std_meta.metadata = true;
      std_meta.decl_pos = -1;
      for (size_t i = 0; i < std::size(kStandardMetadata); ++i) {
        if (kStandardMetadata[i].undef) std_meta.initial[static_cast<int>(i)] = Value::undef();
      }
      add_instance(std::move(std_meta));
    }
    for (size_t pos = 0; pos < tree_.decls.size(); ++pos) {
      const auto* d = std::get_if<InstanceDecl>(&tree_.decls[pos]);
      if (d == nullptr) continue;
      int type = type_id(d->type_name, d->span);
      const HeaderType& ht = p_.header_types[type];
      if (d->metadata && ht.varbit_field >= 0) {
        fail(ErrorCode::kVarbitMisplaced, "metadata cannot have variable-length fields", d->span);
      }
      if (d->stack_size) {
        if (*d->stack_size < 1) fail(ErrorCode::kTypeError, "stack size must be positive", d->span);
        StackInfo s;
        s.name = d->name;
        s.type = type;
        int stack = static_cast<int>(p_.stacks.size());
        for (int i = 0; i < *d->stack_size; ++i) {
          InstanceInfo e;
          e.name = d->name + "[" + std::to_string(i) + "]";
          e.type = type;
          e.stack = stack;
          e.stack_index = i;
          e.decl_pos = static_cast<int>(pos);
          s.elements.push_back(static_cast<int>(p_.instances.size()));
          add_instance(std::move(e));
        }
        p_.stack_index[d->name] = stack;
        p_.stacks.push_back(std::move(s));
        continue;
      }
      InstanceInfo info;
      info.name = d->name;
      info.type = type;
      info.metadata = d->metadata;
      info.decl_pos = static_cast<int>(pos);
      for (const FieldInit& init : d->initializer) {
        int f = ht.field_index(init.field);
        if (f < 0) {
          fail(ErrorCode::kUnresolvedName, "no field '" + init.field + "' in " + d->name, d->span);
        }
        Value v = const_eval(init.value);
        info.initial[f] = fit_to_field(v, ht.fields[f].width, ht.fields[f].is_signed);
      }
      add_instance(std::move(info));
    }
    if (implicit_std_) {
      p_.standard_metadata = 0;
    } else {
      p_.standard_metadata = p_.instance_id("standard_metadata");
    }
  }

  // ---- constants ----

  Value const_eval(const Expr& e) const {
    if (const auto* lit = e.as<IntLit>()) return infer_const_width(lit->value);
    if (const auto* b = e.as<BoolLit>()) return Value::boolean(b->value);
    if (const auto* u = e.as<UnaryExpr>()) return apply_unop(u->op, const_eval(*u->operand));
    if (const auto* b = e.as<BinaryExpr>()) {
      return apply_binop(b->op, const_eval(*b->lhs), const_eval(*b->rhs));
    }
    fail(ErrorCode::kTypeError, "expected a constant: " + print_expression(e), e.span);
  }

  // ---- instance and field resolution ----

  InstanceRef resolve_instance(const NameExpr& n, const NodeSpan& span, bool allow_next) const {
    InstanceRef ref;
    auto sit = p_.stack_index.find(n.name);
    if (sit != p_.stack_index.end()) {
      if (!n.index) {
        fail(ErrorCode::kTypeError, "header stack '" + n.name + "' needs an index", span);
      }
      const StackInfo& s = p_.stacks[sit->second];
      switch (n.index->kind) {
        case HeaderIndex::Kind::kConst:
          if (n.index->value < 0 || n.index->value >= static_cast<int>(s.elements.size())) {
            fail(ErrorCode::kTypeError, "index out of range for stack '" + n.name + "'", span);
          }
          ref.id = s.elements[n.index->value];
          return ref;
        case HeaderIndex::Kind::kNext:
          if (!allow_next) fail(ErrorCode::kTypeError, "'next' is only valid in extract", span);
          ref.kind = InstanceRef::Kind::kNext;
          ref.stack = sit->second;
          return ref;
        case HeaderIndex::Kind::kLast:
          ref.kind = InstanceRef::Kind::kLast;
          ref.stack = sit->second;
          return ref;
      }
    }
    auto it = p_.instance_index.find(n.name);
    if (it == p_.instance_index.end()) {
      fail(ErrorCode::kUnresolvedName, "unknown instance '" + n.name + "'", span);
    }
    if (n.index) fail(ErrorCode::kTypeError, "'" + n.name + "' is not a header stack", span);
    ref.id = it->second;
    return ref;
  }

  int ref_type(const InstanceRef& ref) const {
    if (ref.kind == InstanceRef::Kind::kStatic) return p_.instances[ref.id].type;
    return p_.stacks[ref.stack].type;
  }

  // Returns the field index, or kValidPseudoField for the `valid` pseudo-field.
  FieldRef resolve_field(const FieldExpr& f, const NodeSpan& span) const {
    FieldRef ref;
    ref.instance = resolve_instance(f.instance, span, false);
    const HeaderType& t = p_.header_types[ref_type(ref.instance)];
    if (f.field == "valid") {
      ref.field = kValidPseudoField;
      return ref;
    }
    ref.field = t.field_index(f.field);
    if (ref.field < 0) {
      fail(ErrorCode::kUnresolvedName,
           "no field '" + f.field + "' in '" + print_name(f.instance) + "'", span);
    }
    return ref;
  }

  RExprPtr resolve_expr(const Expr& e, const ExprScope& scope) const {
    auto out = std::make_shared<RExpr>();
    out->span = e.span.at;
    if (const auto* lit = e.as<IntLit>()) {
      out->kind = RExpr::Kind::kConst;
      out->constant = infer_const_width(lit->value);
    } else if (const auto* b = e.as<BoolLit>()) {
      out->kind = RExpr::Kind::kConst;
      out->constant = Value::boolean(b->value);
    } else if (const auto* n = e.as<NameExpr>()) {
      if (scope.params != nullptr && !n->index) {
        const auto& ps = *scope.params;
        for (size_t i = 0; i < ps.size(); ++i) {
          if (ps[i] == n->name) {
            out->kind = RExpr::Kind::kParam;
            out->index = static_cast<int>(i);
            return out;
          }
        }
      }
      if (scope.self_type >= 0 && !n->index) {
        int f = p_.header_types[scope.self_type].field_index(n->name);
        if (f >= 0) {
          out->kind = RExpr::Kind::kSelfField;
          out->index = f;
          return out;
        }
      }
      fail(ErrorCode::kUnresolvedName, "unknown name '" + n->name + "'", e.span);
    } else if (const auto* f = e.as<FieldExpr>()) {
      FieldRef ref = resolve_field(*f, e.span);
      if (ref.field == kValidPseudoField) {
        out->kind = RExpr::Kind::kValid;
        out->instance = ref.instance;
      } else {
        out->kind = RExpr::Kind::kField;
        out->field = ref;
      }
    } else if (const auto* v = e.as<ValidExpr>()) {
      out->kind = RExpr::Kind::kValid;
      out->instance = resolve_instance(v->instance, e.span, false);
    } else if (const auto* c = e.as<CurrentExpr>()) {
      if (!scope.parser) fail(ErrorCode::kTypeError, "current() outside the parser", e.span);
      if (c->width < 1 || c->offset < 0) fail(ErrorCode::kTypeError, "bad current()", e.span);
      out->kind = RExpr::Kind::kCurrent;
      out->offset = c->offset;
      out->width = c->width;
    } else if (const auto* l = e.as<LatestExpr>()) {
      if (!scope.parser) fail(ErrorCode::kTypeError, "latest outside the parser", e.span);
      if (scope.latest_type < 0) {
        fail(ErrorCode::kUnresolvedName, "latest used before any extract", e.span);
      }
      const HeaderType& t = p_.header_types[scope.latest_type];
      int idx = t.field_index(l->field);
      if (idx < 0) fail(ErrorCode::kUnresolvedName, "no field '" + l->field + "' in latest", e.span);
      out->kind = RExpr::Kind::kLatest;
      out->name = l->field;
      out->index = idx;
      out->width = t.fields[idx].width;
    } else if (const auto* u = e.as<UnaryExpr>()) {
      out->kind = RExpr::Kind::kUnary;
      out->unop = u->op;
      out->lhs = resolve_expr(*u->operand, scope);
    } else if (const auto* b = e.as<BinaryExpr>()) {
      out->kind = RExpr::Kind::kBinary;
      out->binop = b->op;
      out->lhs = resolve_expr(*b->lhs, scope);
      out->rhs = resolve_expr(*b->rhs, scope);
    }
    return out;
  }

  int static_width(const RExpr& e, const NodeSpan& span) const {
    switch (e.kind) {
      case RExpr::Kind::kConst:
        return e.constant.width();
      case RExpr::Kind::kField: {
        const FieldInfo& f =
            p_.header_types[ref_type(e.field.instance)].fields[e.field.field];
        if (f.varbit) fail(ErrorCode::kTypeError, "variable-length field as a key", span);
        return f.width;
      }
      case RExpr::Kind::kValid:
        return 1;
      case RExpr::Kind::kCurrent:
      case RExpr::Kind::kLatest:
        return e.width;
      default:
        fail(ErrorCode::kTypeError, "select key must be a field, latest or current", span);
    }
  }

  // ---- field lists / calculations ----

  void build_field_lists() {
    for (const Declaration& d : tree_.decls) {
      const auto* fl = std::get_if<FieldListDecl>(&d);
      if (fl == nullptr) continue;
      field_list_ids_[fl->name] = static_cast<int>(field_list_decls_.size());
      field_list_decls_.push_back(fl);
    }
    for (const FieldListDecl* fl : field_list_decls_) {
      FieldListInfo info;
      info.name = fl->name;
      for (const FieldListEntry& e : fl->entries) {
        if (e.payload) {
          fail(ErrorCode::kPayloadUnsupported,
               "field list '" + fl->name + "' uses payload, which has no semantics here",
               fl->span);
        }
        FieldListItem item;
        const Expr& x = *e.expr;
        if (const auto* f = x.as<FieldExpr>()) {
          item.kind = FieldListItem::Kind::kField;
          item.field = resolve_field(*f, x.span);
          if (item.field.field == kValidPseudoField) {
            fail(ErrorCode::kTypeError, "valid is not a field", x.span);
          }
        } else if (const auto* n = x.as<NameExpr>()) {
          auto it = field_list_ids_.find(n->name);
          if (it != field_list_ids_.end() && !n->index) {
            item.kind = FieldListItem::Kind::kList;
            item.list = it->second;
          } else {
            item.kind = FieldListItem::Kind::kInstance;
            item.instance = resolve_instance(*n, x.span, false);
          }
        } else {
          item.kind = FieldListItem::Kind::kConst;
          item.constant = const_eval(x);
        }
        info.items.push_back(std::move(item));
      }
      p_.field_lists.push_back(std::move(info));
    }
  }

  void build_calculations() {
    for (const Declaration& d : tree_.decls) {
      const auto* c = std::get_if<FieldListCalcDecl>(&d);
      if (c == nullptr) continue;
      CalculationInfo info;
      info.name = c->name;
      for (const std::string& in : c->inputs) {
        int id = p_.field_list_id(in);
        if (id < 0) fail(ErrorCode::kUnresolvedName, "unknown field_list '" + in + "'", c->span);
        info.inputs.push_back(id);
      }
      static const std::pair<const char*, HashAlgorithm> kAlgorithms[] = {
          {"csum16", HashAlgorithm::kCsum16}, {"crc16", HashAlgorithm::kCrc16},
          {"crc32", HashAlgorithm::kCrc32},   {"xor16", HashAlgorithm::kXor16},
          {"identity", HashAlgorithm::kIdentity},
      };
      bool found = false;
      for (const auto& [name, alg] : kAlgorithms) {
        if (c->algorithm == name) {
          info.algorithm = alg;
          found = true;
        }
      }
      if (!found) {
        fail(ErrorCode::kUnresolvedName, "unknown hash algorithm '" + c->algorithm + "'", c->span);
      }
      if (c->output_width < 1) fail(ErrorCode::kTypeError, "output_width must be positive", c->span);
      info.output_width = c->output_width;
      p_.calculations.push_back(std::move(info));
    }
  }

  void check_identity_widths() {
    for (const CalculationInfo& c : p_.calculations) {
      if (c.algorithm != HashAlgorithm::kIdentity) continue;
      int total = 0;
      for (int list : c.inputs) {
        for (const FlatItem& item : flatten_field_list(p_, list)) {
          if (item.is_const) {
            total += item.constant.width();
            continue;
          }
          const FieldInfo& f =
              p_.header_types[ref_type(item.field.instance)].fields[item.field.field];
          if (f.varbit) {
            throw Error(ErrorCode::kHashWidthMismatch,
                        "identity calculation '" + c.name + "' over a variable-length field");
          }
          total += f.width;
        }
      }
      if (total != c.output_width) {
        throw Error(ErrorCode::kHashWidthMismatch,
                    "identity calculation '" + c.name + "' covers " + std::to_string(total) +
                        " bits but output_width is " + std::to_string(c.output_width));
      }
    }
  }

  // ---- tables, actions ----

  void declare_tables_and_actions() {
    for (const Declaration& d : tree_.decls) {
      if (const auto* t = std::get_if<TableDecl>(&d)) {
        TableInfo info;
        info.name = t->name;
        info.size = t->size;
        p_.tables.push_back(std::move(info));
      } else if (const auto* a = std::get_if<ActionDecl>(&d)) {
        ActionInfo info;
        info.name = a->name;
        info.params = a->params;
        std::set<std::string> seen;
        for (const std::string& prm : a->params) {
          if (!seen.insert(prm).second) {
            fail(ErrorCode::kDuplicateName, "duplicate parameter '" + prm + "'", a->span);
          }
        }
        p_.actions.push_back(std::move(info));
        action_decls_.push_back(a);
      } else if (const auto* c = std::get_if<ControlDecl>(&d)) {
        ControlInfo info;
        info.name = c->name;
        p_.controls.push_back(std::move(info));
      }
    }
  }

  void saturating_warning(const std::string& what, const NodeSpan& span) {
    p_.warnings.push_back(span.at.to_string() + ": saturating attribute on " + what +
                          " is treated as wrap-around");
  }

  void build_statefuls() {
    for (const Declaration& d : tree_.decls) {
      StatefulInfo info;
      const StatefulBinding* binding = nullptr;
      NodeSpan span;
      if (const auto* c = std::get_if<CounterDecl>(&d)) {
        info.name = c->name;
        info.kind = StatefulKind::kCounter;
        if (c->type == "bytes") {
          info.bytes = true;
        } else if (c->type == "packets_and_bytes") {
          info.bytes = true;
          info.width = 128;
        } else if (c->type != "packets") {
          fail(ErrorCode::kTypeError, "unknown counter type '" + c->type + "'", c->span);
        }
        if (info.width != 128) info.width = 64;
        info.instance_count = c->instance_count;
        if (c->saturating) saturating_warning("counter " + c->name, c->span);
        binding = &c->binding;
        span = c->span;
      } else if (const auto* m = std::get_if<MeterDecl>(&d)) {
        info.name = m->name;
        info.kind = StatefulKind::kMeter;
        if (m->type != "bytes" && m->type != "packets") {
          fail(ErrorCode::kTypeError, "unknown meter type '" + m->type + "'", m->span);
        }
        info.bytes = m->type == "bytes";
        info.width = 64;
        info.instance_count = m->instance_count;
        if (m->result) {
          FieldRef r = resolve_field(*m->result, m->span);
          if (r.field == kValidPseudoField) fail(ErrorCode::kTypeError, "bad meter result", m->span);
          info.meter_result = r;
        }
        binding = &m->binding;
        span = m->span;
      } else if (const auto* r = std::get_if<RegisterDecl>(&d)) {
        info.name = r->name;
        info.kind = StatefulKind::kRegister;
        if (r->width < 1) fail(ErrorCode::kTypeError, "register width must be positive", r->span);
        info.width = r->width;
        info.is_signed = r->is_signed;
        if (r->saturating) saturating_warning("register " + r->name, r->span);
        info.instance_count = r->instance_count;
        binding = &r->binding;
        span = r->span;
      } else {
        continue;
      }
      int id = static_cast<int>(p_.statefuls.size());
      if (binding->kind != StatefulBinding::Kind::kNone) {
        int table = p_.table_id(binding->table);
        if (table < 0) {
          fail(ErrorCode::kUnresolvedName, "unknown table '" + binding->table + "'", span);
        }
        if (binding->kind == StatefulBinding::Kind::kDirect) {
          info.direct_table = table;
          if (info.instance_count) {
            fail(ErrorCode::kTypeError, "direct '" + info.name + "' cannot have instance_count",
                 span);
          }
          p_.tables[table].direct_statefuls.push_back(id);
        } else {
          info.static_table = table;
        }
      }
      if (info.direct_table < 0 && !info.instance_count) {
        fail(ErrorCode::kTypeError, "'" + info.name + "' needs instance_count or direct binding",
             span);
      }
      if (info.instance_count && *info.instance_count < 1) {
        fail(ErrorCode::kTypeError, "instance_count must be positive", span);
      }
      p_.statefuls.push_back(std::move(info));
    }
  }

  int named(const std::string& name, const std::string& kind, const NodeSpan& span) const {
    std::string k = kind_of(name);
    if (k.empty()) fail(ErrorCode::kUnresolvedName, "unknown " + kind + " '" + name + "'", span);
    if (k != kind) fail(ErrorCode::kTypeError, "'" + name + "' is a " + k + ", not a " + kind, span);
    if (kind == "register" || kind == "counter" || kind == "meter") return p_.stateful_id(name);
    if (kind == "field_list") return p_.field_list_id(name);
    if (kind == "field_list_calculation") return p_.calculation_id(name);
    return -1;
  }

  RArg resolve_arg(ArgRole role, const Expr& e, const ActionInfo& action,
                   const NodeSpan& span) const {
    RArg arg;
    arg.role = role;
    const auto* n = e.as<NameExpr>();
    if (n != nullptr && !n->index) {
      for (size_t i = 0; i < action.params.size(); ++i) {
        if (action.params[i] == n->name) {
          arg.param = true;
          arg.param_index = static_cast<int>(i);
          if (role == ArgRole::kValue || role == ArgRole::kField) {
            ExprScope scope;
            scope.params = &action.params;
            arg.expr = resolve_expr(e, scope);
          }
          return arg;
        }
      }
    }
    ExprScope scope;
    scope.params = &action.params;
    switch (role) {
      case ArgRole::kValue:
        arg.expr = resolve_expr(e, scope);
        return arg;
      case ArgRole::kField: {
        const auto* f = e.as<FieldExpr>();
        if (f == nullptr) fail(ErrorCode::kTypeError, "expected a field reference", span);
        arg.expr = resolve_expr(e, scope);
        if (arg.expr->kind != RExpr::Kind::kField) {
          fail(ErrorCode::kTypeError, "valid cannot be assigned", span);
        }
        return arg;
      }
      case ArgRole::kInstance:
        if (n == nullptr) fail(ErrorCode::kTypeError, "expected a header instance", span);
        arg.instance = resolve_instance(*n, span, false);
        return arg;
      case ArgRole::kStack: {
        if (n == nullptr || n->index || !p_.stack_index.count(n->name)) {
          fail(ErrorCode::kTypeError, "expected a header stack", span);
        }
        arg.id = p_.stack_index.at(n->name);
        return arg;
      }
      default:
        break;
    }
    if (n == nullptr || n->index) {
      fail(ErrorCode::kTypeError, "expected a " + std::string(arg_role_name(role)) + " name", span);
    }
    arg.id = named(n->name, std::string(arg_role_name(role)), span);
    return arg;
  }

  void build_actions() {
    for (size_t ai = 0; ai < action_decls_.size(); ++ai) {
      const ActionDecl& decl = *action_decls_[ai];
      ActionInfo& info = p_.actions[ai];
      for (const ActionCall& call : decl.body) {
        RCall rc;
        rc.name = call.name;
        rc.site = decl.name + "/" + call.name + "@" + call.span.at.to_string();
        if (const PrimitiveSpec* spec = find_primitive(call.name)) {
          rc.primitive = spec;
          int n = static_cast<int>(call.args.size());
          if (n < spec->min_args || n > static_cast<int>(spec->roles.size())) {
            fail(ErrorCode::kTypeError,
                 "wrong number of arguments to primitive '" + call.name + "'", call.span);
          }
          for (int i = 0; i < n; ++i) {
            rc.args.push_back(resolve_arg(spec->roles[i], call.args[i], info, call.span));
          }
        } else {
          int target = p_.action_id(call.name);
          if (target < 0) {
            // Not a primitive or an action: a target-supplied extern, bound
            // (or found missing) at run time.
            ExprScope scope;
            scope.params = &info.params;
            for (const Expr& a : call.args) {
              RArg arg;
              arg.expr = resolve_expr(a, scope);
              rc.args.push_back(std::move(arg));
            }
            info.body.push_back(std::move(rc));
            continue;
          }
          rc.action = target;
          if (call.args.size() != p_.actions[target].params.size()) {
            fail(ErrorCode::kTypeError, "wrong number of arguments to '" + call.name + "'",
                 call.span);
          }
          for (const Expr& a : call.args) rc.args.push_back(compound_arg(a, info, call.span));
        }
        info.body.push_back(std::move(rc));
      }
    }
  }

  // Arguments to a compound action: values, fields (bound by reference) or
  // names of instances and stateful objects.
  RArg compound_arg(const Expr& e, const ActionInfo& caller, const NodeSpan& span) const {
    RArg arg;
    arg.role = ArgRole::kValue;
    if (const auto* n = e.as<NameExpr>()) {
      for (size_t i = 0; i < caller.params.size(); ++i) {
        if (!n->index && caller.params[i] == n->name) {
          arg.param = true;
          arg.param_index = static_cast<int>(i);
          ExprScope scope;
          scope.params = &caller.params;
          arg.expr = resolve_expr(e, scope);
          return arg;
        }
      }
      bool known = p_.instance_index.count(n->name) || p_.stack_index.count(n->name) ||
                   !kind_of(n->name).empty();
      if (!known) fail(ErrorCode::kUnresolvedName, "unknown name '" + n->name + "'", span);
      if (n->index) resolve_instance(*n, span, false);
      arg.role = ArgRole::kInstance;
      arg.name_text = print_name(*n);
      return arg;
    }
    ExprScope scope;
    scope.params = &caller.params;
    arg.expr = resolve_expr(e, scope);
    return arg;
  }

  void synthesize_primitive_action(const std::string& name, const NodeSpan& span) {
    if (p_.action_id(name) >= 0) return;
    const PrimitiveSpec* spec = find_primitive(name);
    ActionInfo info;
    info.name = name;
    info.from_primitive = true;
    RCall call;
    call.name = name;
    call.primitive = spec;
    call.site = name + "/" + name;
    for (int i = 0; i < spec->min_args; ++i) {
      if (spec->roles[i] != ArgRole::kValue) {
        fail(ErrorCode::kTypeError,
             "primitive '" + name + "' cannot be used directly as a table action", span);
      }
      info.params.push_back("p" + std::to_string(i));
      RArg arg;
      arg.role = ArgRole::kValue;
      arg.param = true;
      arg.param_index = i;
      auto e = std::make_shared<RExpr>();
      e->kind = RExpr::Kind::kParam;
      e->index = i;
      arg.expr = e;
      call.args.push_back(std::move(arg));
    }
    info.body.push_back(std::move(call));
    p_.actions.push_back(std::move(info));
  }

  void build_tables() {
    int ti = 0;
    for (const Declaration& d : tree_.decls) {
      const auto* t = std::get_if<TableDecl>(&d);
      if (t == nullptr) continue;
      TableInfo& info = p_.tables[ti++];
      for (const TableRead& r : t->reads) {
        TableReadInfo read;
        read.text = print_expression(r.target);
        static const std::pair<const char*, MatchKind> kKinds[] = {
            {"exact", MatchKind::kExact}, {"ternary", MatchKind::kTernary},
            {"lpm", MatchKind::kLpm},     {"range", MatchKind::kRange},
            {"valid", MatchKind::kValid},
        };
        bool found = false;
        for (const auto& [name, kind] : kKinds) {
          if (r.match_kind == name) {
            read.kind = kind;
            found = true;
          }
        }
        if (!found) {
          fail(ErrorCode::kTypeError, "unknown match kind '" + r.match_kind + "'", t->span);
        }
        if (const auto* n = r.target.as<NameExpr>()) {
          if (read.kind != MatchKind::kValid) {
            fail(ErrorCode::kTypeError, "only valid reads may name a whole instance", t->span);
          }
          read.instance = resolve_instance(*n, r.target.span, false);
        } else if (const auto* f = r.target.as<FieldExpr>()) {
          FieldRef ref = resolve_field(*f, r.target.span);
          if (read.kind == MatchKind::kValid) {
            read.instance = ref.instance;
          } else if (ref.field == kValidPseudoField) {
            auto e = std::make_shared<RExpr>();
            e->kind = RExpr::Kind::kValid;
            e->instance = ref.instance;
            read.target = e;
            read.width = 1;
          } else {
            const FieldInfo& fi = p_.header_types[ref_type(ref.instance)].fields[ref.field];
            if (fi.varbit) fail(ErrorCode::kTypeError, "cannot match a variable-length field",
                                t->span);
            auto e = std::make_shared<RExpr>();
            e->kind = RExpr::Kind::kField;
            e->field = ref;
            read.target = e;
            read.width = fi.width;
          }
        } else {
          fail(ErrorCode::kTypeError, "table reads must name fields or instances", t->span);
        }
        if (r.mask) read.mask = const_eval(*r.mask).bits() & low_mask(read.width);
        info.reads.push_back(std::move(read));
      }
      if (t->actions.empty()) fail(ErrorCode::kTypeError, "table without actions", t->span);
      for (const std::string& a : t->actions) {
        if (p_.action_id(a) < 0 && find_primitive(a) != nullptr) {
          synthesize_primitive_action(a, t->span);
        }
        int id = p_.action_id(a);
        if (id < 0) fail(ErrorCode::kUnresolvedName, "unknown action '" + a + "'", t->span);
        for (int existing : info.actions) {
          if (existing == id) fail(ErrorCode::kDuplicateName, "action listed twice", t->span);
        }
        info.actions.push_back(id);
      }
    }
  }

  // ---- controls ----

  RBlock resolve_block(const ControlBlock& b, const std::string& control) {
    RBlock out;
    for (const ControlStmt& s : b.stmts) {
      RStmt r;
      r.site = control + "@" + s.span.at.to_string();
      if (const auto* a = std::get_if<ApplyStmt>(&s.node)) {
        r.kind = RStmt::Kind::kApply;
        r.table = p_.table_id(a->table);
        if (r.table < 0) fail(ErrorCode::kUnresolvedName, "unknown table '" + a->table + "'", s.span);
        r.case_kind = a->case_kind;
        std::set<std::string> labels;
        for (const ApplyCase& c : a->cases) {
          if (!labels.insert(c.label).second) {
            fail(ErrorCode::kDuplicateName, "duplicate case '" + c.label + "'", s.span);
          }
          RApplyCase rc;
          rc.label = c.label;
          if (a->case_kind == ApplyStmt::CaseKind::kAction && c.label != "default") {
            rc.action = p_.action_id(c.label);
            const auto& acts = p_.tables[r.table].actions;
            if (rc.action < 0 || std::find(acts.begin(), acts.end(), rc.action) == acts.end()) {
              fail(ErrorCode::kUnresolvedName,
                   "'" + c.label + "' is not an action of table '" + a->table + "'", s.span);
            }
          }
          rc.body = Box<RBlock>(resolve_block(*c.body, control));
          r.cases.push_back(std::move(rc));
        }
      } else if (const auto* i = std::get_if<IfStmt>(&s.node)) {
        r.kind = RStmt::Kind::kIf;
        r.condition = resolve_expr(i->condition, ExprScope{});
        r.then_block = Box<RBlock>(resolve_block(*i->then_block, control));
        if (i->else_block) r.else_block = Box<RBlock>(resolve_block(**i->else_block, control));
      } else {
        const auto& c = std::get<CallStmt>(s.node);
        r.kind = RStmt::Kind::kCall;
        r.control = p_.control_id(c.control);
        if (r.control < 0) {
          fail(ErrorCode::kUnresolvedName, "unknown control '" + c.control + "'", s.span);
        }
      }
      out.stmts.push_back(std::move(r));
    }
    return out;
  }

  void build_controls() {
    int ci = 0;
    for (const Declaration& d : tree_.decls) {
      const auto* c = std::get_if<ControlDecl>(&d);
      if (c == nullptr) continue;
      p_.controls[ci++].body = resolve_block(c->body, c->name);
    }
    p_.ingress = p_.control_id("ingress");
    if (p_.ingress < 0) throw Error(ErrorCode::kNoIngress, "program has no 'control ingress'");
    p_.egress = p_.control_id("egress");
  }

  // ---- parser ----

  ParserTarget resolve_target(const std::string& name, const NodeSpan& span) const {
    ParserTarget t;
    t.name = name;
    int s = p_.state_id(name);
    if (s >= 0) {
      t.kind = ParserTarget::Kind::kState;
      t.id = s;
      return t;
    }
    int c = p_.control_id(name);
    if (c >= 0) {
      t.kind = ParserTarget::Kind::kControl;
      t.id = c;
      return t;
    }
    fail(ErrorCode::kUnresolvedName, "unknown parser state or control '" + name + "'", span);
  }

  ParserTarget resolve_exception(const std::string& name, const NodeSpan& span) const {
    ParserTarget t;
    t.kind = ParserTarget::Kind::kException;
    t.name = name;
    t.id = p_.exception_id(name);
    if (t.id < 0 && name.rfind("p4_pe_", 0) != 0) {
      fail(ErrorCode::kUnresolvedName, "unknown parser exception '" + name + "'", span);
    }
    return t;
  }

  RParserStmt resolve_parser_stmt(const ParserStmt& s, const std::string& owner,
                                  ExprScope* scope) {
    RParserStmt r;
    r.site = owner + "@" + s.span.at.to_string();
    if (s.kind == ParserStmt::Kind::kExtract) {
      const auto* n = s.target.as<NameExpr>();
      r.extract = true;
      r.target = resolve_instance(*n, s.span, true);
      if (r.target.kind == InstanceRef::Kind::kLast) {
        fail(ErrorCode::kTypeError, "cannot extract into [last]", s.span);
      }
      if (r.target.kind == InstanceRef::Kind::kStatic && p_.instances[r.target.id].metadata) {
        fail(ErrorCode::kTypeError, "cannot extract metadata", s.span);
      }
      scope->latest_type = ref_type(r.target);
    } else {
      r.extract = false;
      const auto* f = s.target.as<FieldExpr>();
      r.field = resolve_field(*f, s.span);
      if (r.field.field == kValidPseudoField) fail(ErrorCode::kTypeError, "cannot set valid", s.span);
      r.value = resolve_expr(*s.value, *scope);
    }
    return r;
  }

  void build_parser() {
    std::vector<const ParserStateDecl*> states;
    std::vector<const ParserExceptionDecl*> excs;
    for (const Declaration& d : tree_.decls) {
      if (const auto* s = std::get_if<ParserStateDecl>(&d)) {
        ParserStateInfo info;
        info.name = s->name;
        p_.parser_states.push_back(std::move(info));
        states.push_back(s);
      } else if (const auto* e = std::get_if<ParserExceptionDecl>(&d)) {
        ExceptionInfo info;
        info.name = e->name;
        p_.exceptions.push_back(std::move(info));
        excs.push_back(e);
      }
    }
    for (size_t i = 0; i < states.size(); ++i) {
      const ParserStateDecl& s = *states[i];
      ParserStateInfo& info = p_.parser_states[i];
      ExprScope scope;
      scope.parser = true;
      for (const ParserStmt& st : s.stmts) {
        info.stmts.push_back(resolve_parser_stmt(st, s.name, &scope));
      }
      info.return_kind = s.ret.kind;
      switch (s.ret.kind) {
        case ParserReturn::Kind::kDirect:
          info.target = resolve_target(s.ret.target, s.ret.span);
          break;
        case ParserReturn::Kind::kParseError:
          info.target = resolve_exception(s.ret.target, s.ret.span);
          break;
        case ParserReturn::Kind::kSelect: {
          for (const Expr& k : s.ret.keys) {
            RExprPtr key = resolve_expr(k, scope);
            int w = static_width(*key, k.span);
            info.keys.push_back(key);
            info.key_widths.push_back(w);
            info.key_width += w;
          }
          bool saw_default = false;
          for (const SelectCase& c : s.ret.cases) {
            RSelectCase rc;
            rc.is_default = c.is_default;
            if (saw_default) {
              fail(ErrorCode::kTypeError, "select case after default is unreachable", c.span);
            }
            saw_default = c.is_default;
            for (const SelectValue& v : c.values) {
              RSelectValue rv;
              rv.value = const_eval(v.value).as_integer() & low_mask(info.key_width);
              rv.mask = v.mask ? const_eval(*v.mask).as_integer() & low_mask(info.key_width)
                               : low_mask(info.key_width);
              rc.values.push_back(rv);
            }
            if (c.target.rfind("p4_pe_", 0) == 0 || p_.exception_id(c.target) >= 0) {
              rc.target = resolve_exception(c.target, c.span);
            } else {
              rc.target = resolve_target(c.target, c.span);
            }
            info.cases.push_back(std::move(rc));
          }
          break;
        }
      }
    }
    for (size_t i = 0; i < excs.size(); ++i) {
      const ParserExceptionDecl& e = *excs[i];
      ExceptionInfo& info = p_.exceptions[i];
      ExprScope scope;
      scope.parser = true;
      for (const ParserStmt& st : e.stmts) {
        info.stmts.push_back(resolve_parser_stmt(st, e.name, &scope));
      }
      info.drop = e.drop;
      if (!e.drop) {
        info.control = p_.control_id(e.target);
        if (info.control < 0) {
          fail(ErrorCode::kUnresolvedName, "unknown control '" + e.target + "'", e.span);
        }
      }
    }
    p_.start_state = p_.state_id("start");
    if (p_.start_state < 0) throw Error(ErrorCode::kUnresolvedName, "missing parser 'start'");
    p_.default_exception = p_.exception_id("p4_pe_default");
    p_.unhandled_select = p_.exception_id("p4_pe_unhandled_select");
  }

  void build_calculated_fields() {
    for (const Declaration& d : tree_.decls) {
      const auto* c = std::get_if<CalculatedFieldDecl>(&d);
      if (c == nullptr) continue;
      FieldRef ref = resolve_field(c->field, c->span);
      if (ref.instance.kind != InstanceRef::Kind::kStatic || ref.field == kValidPseudoField) {
        fail(ErrorCode::kTypeError, "calculated field must be a fixed instance field", c->span);
      }
      for (const CalcBinding& b : c->bindings) {
        CalcBindingInfo info;
        info.verify = b.verify;
        info.instance = ref.instance.id;
        info.field = ref.field;
        info.calculation = p_.calculation_id(b.calculation);
        if (info.calculation < 0) {
          fail(ErrorCode::kUnresolvedName,
               "unknown field_list_calculation '" + b.calculation + "'", c->span);
        }
        if (b.condition) info.condition = resolve_expr(*b.condition, ExprScope{});
        info.site = print_field(c->field) + (b.verify ? " verify " : " update ") + b.calculation;
        (b.verify ? p_.verify_bindings : p_.update_bindings).push_back(std::move(info));
      }
    }
  }

  const SyntaxTree& tree_;
  Program p_;
  std::map<std::string, std::string> kinds_;
  std::set<std::string> type_names_;
  bool implicit_std_ = true;
  std::vector<const FieldListDecl*> field_list_decls_;
  std::map<std::string, int> field_list_ids_;
  std::vector<const ActionDecl*> action_decls_;
};

template <typename T>
int find_by_name(const std::vector<T>& items, const std::string& name) {
  for (size_t i = 0; i < items.size(); ++i) {
    if (items[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

int HeaderType::field_index(const std::string& field) const {
  return find_by_name(fields, field);
}

std::string_view match_kind_name(MatchKind kind) {
  switch (kind) {
    case MatchKind::kExact: return "exact";
    case MatchKind::kTernary: return "ternary";
    case MatchKind::kLpm: return "lpm";
    case MatchKind::kRange: return "range";
    case MatchKind::kValid: return "valid";
  }
  return "?";
}

InstanceId Program::instance_id(const std::string& name) const {
  auto it = instance_index.find(name);
  return it == instance_index.end() ? -1 : it->second;
}
int Program::stack_id(const std::string& name) const {
  auto it = stack_index.find(name);
  return it == stack_index.end() ? -1 : it->second;
}
int Program::table_id(const std::string& name) const { return find_by_name(tables, name); }
int Program::action_id(const std::string& name) const { return find_by_name(actions, name); }
int Program::control_id(const std::string& name) const { return find_by_name(controls, name); }
int Program::stateful_id(const std::string& name) const { return find_by_name(statefuls, name); }
int Program::field_list_id(const std::string& name) const {
  return find_by_name(field_lists, name);
}
int Program::calculation_id(const std::string& name) const {
  return find_by_name(calculations, name);
}
int Program::exception_id(const std::string& name) const {
  return find_by_name(exceptions, name);
}
int Program::state_id(const std::string& name) const { return find_by_name(parser_states, name); }

bool Program::resolve_field(const std::string& text, FieldRef* out) const {
  size_t dot = text.rfind('.');
  if (dot == std::string::npos) return false;
  InstanceId inst = instance_id(text.substr(0, dot));
  if (inst < 0) return false;
  std::string field = text.substr(dot + 1);
  out->instance = InstanceRef{InstanceRef::Kind::kStatic, inst, -1};
  if (field == "valid") {
    out->field = kValidPseudoField;
    return true;
  }
  out->field = type_of(inst).field_index(field);
  return out->field >= 0;
}

std::string Program::instance_text(const InstanceRef& ref) const {
  switch (ref.kind) {
    case InstanceRef::Kind::kStatic: return instances[ref.id].name;
    case InstanceRef::Kind::kNext: return stacks[ref.stack].name + "[next]";
    case InstanceRef::Kind::kLast: return stacks[ref.stack].name + "[last]";
  }
  return "?";
}

std::string Program::field_text(const FieldRef& ref) const {
  std::string inst = instance_text(ref.instance);
  if (ref.field == kValidPseudoField) return inst + ".valid";
  int type = ref.instance.kind == InstanceRef::Kind::kStatic ? instances[ref.instance.id].type
                                                               : stacks[ref.instance.stack].type;
  return inst + "." + header_types[type].fields[ref.field].name;
}

Program elaborate(const ast::SyntaxTree& tree) { return Elaborator(tree).run(); }

Program load_program_source(std::string_view source) { return elaborate(parse_source(source)); }

Program load_program_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_program_source(ss.str());
}

}  // namespace p4sem
