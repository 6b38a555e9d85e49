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


#include "p4sem/parser_engine/parser_engine.h"

namespace p4sem {

namespace {

constexpr const char* kOutOfPacket = "p4_pe_out_of_packet";
constexpr const char* kIndexOutOfBounds = "p4_pe_index_out_of_bounds";
constexpr const char* kChecksum = "p4_pe_checksum";
constexpr const char* kUnhandledSelect = "p4_pe_unhandled_select";

void run_parser_stmt(ExecContext& ctx, const RParserStmt& s) {
  if (s.extract) {
    extract(ctx, s.target, s.site);
    return;
  }
  ctx.hit(Site::kParseSetMetadata);
  Value v = eval(ctx, *s.value, s.site);
  InstanceId inst = resolve_instance(ctx, s.field.instance, s.site);
  set_field(ctx.cfg, inst, s.field.field, v, s.site);
}

bool select_alternative(ExecContext& ctx, const ParserStateInfo& state,
                        const std::vector<Value>& keys, const RSelectValue& alt,
                        const std::string& site) {
  int shift = state.key_width;
  for (size_t i = 0; i < keys.size(); ++i) {
    int w = state.key_widths[i];
    shift -= w;
    BigInt v = (alt.value >> shift) & low_mask(w);
    BigInt m = (alt.mask >> shift) & low_mask(w);
    if (!match_ternary(ctx, keys[i], v, m, site)) return false;
  }
  return true;
}

}  // namespace

int parser_status_code(const Program& program, const std::string& name) {
  if (name == kOutOfPacket) return 1;
  if (name == kIndexOutOfBounds) return 2;
  if (name == kChecksum) return 3;
  if (name == kUnhandledSelect) return 4;
  int id = program.exception_id(name);
  return id >= 0 ? (16 + id) & 0xff : 15;
}

void extract(ExecContext& ctx, const InstanceRef& target, const std::string& site) {
  InstanceId id = target.id;
  if (target.kind == InstanceRef::Kind::kNext) {
    id = stack_next(ctx.cfg, target.stack);
    if (id < 0) {
      ctx.hit(Site::kParseStackFull);
      throw ParserException{kIndexOutOfBounds};
    }
    ctx.hit(Site::kParseExtractStackNext);
  }
  ctx.hit(Site::kParseExtract);
  const Program& p = ctx.program;
  const HeaderType& type = p.type_of(id);
  const std::string& name = p.instances[id].name;
  if (!packet_has_bits(ctx, ctx.offset + type.fixed_width, site)) {
    ctx.hit(Site::kParseOutOfPacket);
    throw ParserException{kOutOfPacket};
  }
  std::vector<Value> fields(type.fields.size());
  size_t pos = ctx.offset;
  for (size_t f = 0; f < type.fields.size(); ++f) {
    const FieldInfo& fi = type.fields[f];
    if (fi.varbit) continue;
    fields[f] = read_packet(ctx, pos, fi.width, name, fi.name, site).with_signedness(fi.is_signed);
    pos += fi.width;
  }
  if (type.varbit_field >= 0) {
    ctx.self_fields = &fields;
    Value len;
    try {
      len = eval(ctx, *type.length, site);
    } catch (...) {
      ctx.self_fields = nullptr;
      throw;
    }
    ctx.self_fields = nullptr;
    if (len.is_undef()) {
      throw Stuck(StuckReason::kBadVarbitLen, site + ": length of " + name + " is @undef");
    }
    len = concretize(ctx, len, site);
    BigInt bytes = len.as_integer();
    if (bytes < 0 || (type.max_length && bytes > *type.max_length) ||
        bytes * 8 < type.fixed_width) {
      throw Stuck(StuckReason::kBadVarbitLen,
                  site + ": length " + bytes.str() + " of " + name + " out of bounds");
    }
    int vw = static_cast<int>(bytes) * 8 - type.fixed_width;
    if (!packet_has_bits(ctx, pos + vw, site)) {
      ctx.hit(Site::kParseOutOfPacket);
      throw ParserException{kOutOfPacket};
    }
    fields[type.varbit_field] = read_packet(ctx, pos, vw, name, type.fields[type.varbit_field].name, site);
    pos += vw;
    ctx.hit(Site::kParseExtractVarbit);
  }
  InstanceState& st = ctx.cfg.instances[id];
  st.valid = true;
  st.fields = std::move(fields);
  ctx.offset = pos;
  ctx.latest = id;
}

ParserTarget eval_select(ExecContext& ctx, const ParserStateInfo& state, const std::string& site) {
  std::vector<Value> keys;
  for (const RExprPtr& k : state.keys) keys.push_back(eval(ctx, *k, site));
  for (const RSelectCase& c : state.cases) {
    if (c.is_default) {
      ctx.hit(Site::kParseSelectDefault);
      return c.target;
    }
    for (const RSelectValue& alt : c.values) {
      if (select_alternative(ctx, state, keys, alt, site)) {
        ctx.hit(Site::kParseSelectCase);
        if (alt.mask != low_mask(state.key_width)) ctx.hit(Site::kParseSelectMasked);
        return c.target;
      }
    }
  }
  if (ctx.program.unhandled_select >= 0) {
    ctx.hit(Site::kParseSelectUnhandled);
    ParserTarget t;
    t.kind = ParserTarget::Kind::kException;
    t.name = kUnhandledSelect;
    return t;
  }
  throw Stuck(StuckReason::kNoBranch, site + ": no select case matches in " + state.name);
}

std::optional<std::string> verify_calculated_fields(ExecContext& ctx) {
  const Program& p = ctx.program;
  std::vector<const CalcBindingInfo*> todo;
  for (const CalcBindingInfo& b : p.verify_bindings) {
    if (!ctx.cfg.instances[b.instance].valid) continue;
    if (b.condition && !truthy(ctx, eval(ctx, *b.condition, b.site), b.site)) continue;
    todo.push_back(&b);
  }
  if (todo.empty()) return std::nullopt;
  int k = static_cast<int>(todo.size());
  int pick = ctx.choose(ChoiceKind::kVerifyOrder, static_cast<int>(factorial(k)), "verify");
  for (int i : nth_permutation(k, pick)) {
    const CalcBindingInfo& b = *todo[i];
    BigInt computed = compute_calculation(ctx, b.calculation, b.site);
    const FieldInfo& fi = p.type_of(b.instance).fields[b.field];
    Value stored = concretize(ctx, get_field(ctx.cfg, b.instance, b.field, b.site), b.site);
    if ((computed & low_mask(fi.width)) != stored.bits()) {
      ctx.hit(Site::kVerifyFail);
      return std::string(kChecksum);
    }
    ctx.hit(Site::kVerifyPass);
  }
  return std::nullopt;
}

ParseOutcome handle_parser_exception(ExecContext& ctx, const std::string& name) {
  const Program& p = ctx.program;
  ParseOutcome out;
  out.exception = name;
  if (p.standard_metadata >= 0) {
    int f = p.type_of(p.standard_metadata).field_index("parser_status");
    if (f >= 0) {
      set_field(ctx.cfg, p.standard_metadata, f,
                Value::concrete(8, parser_status_code(p, name)), "parser exception");
    }
  }
  int id = p.exception_id(name);
  if (id < 0) id = p.default_exception;
  if (id < 0) {
    ctx.hit(Site::kParseHandlerImplicitDrop);
    out.dropped = true;
    return out;
  }
  ctx.hit(Site::kParseHandlerUser);
  const ExceptionInfo& handler = p.exceptions[id];
  try {
    for (const RParserStmt& s : handler.stmts) run_parser_stmt(ctx, s);
  } catch (const ParserException& e) {
    throw Stuck(StuckReason::kUnspecifiedPrimitiveCase,
                handler.name + ": exception " + e.name + " inside a handler");
  }
  if (handler.drop) {
    ctx.hit(Site::kParseHandlerDrop);
    out.dropped = true;
  } else {
    ctx.hit(Site::kParseHandlerToControl);
    out.control = handler.control;
  }
  return out;
}

ParseOutcome run_parser(ExecContext& ctx) {
  const Program& p = ctx.program;
  int state = p.start_state;
  int transitions = 0;
  try {
    while (true) {
      if (++transitions > ctx.options.parse_budget) {
        throw Stuck(StuckReason::kParseLoopBudget,
                    p.parser_states[state].name + ": more than " +
                        std::to_string(ctx.options.parse_budget) + " parser transitions");
      }
      const ParserStateInfo& st = p.parser_states[state];
      for (const RParserStmt& s : st.stmts) run_parser_stmt(ctx, s);
      std::string site = st.name + " return";
      ParserTarget target = st.return_kind == ast::ParserReturn::Kind::kSelect
                                ? eval_select(ctx, st, site)
                                : st.target;
      switch (target.kind) {
        case ParserTarget::Kind::kState:
          ctx.hit(Site::kParseReturnState);
          state = target.id;
          continue;
        case ParserTarget::Kind::kException:
          if (st.return_kind != ast::ParserReturn::Kind::kSelect ||
              target.name != kUnhandledSelect) {
            ctx.hit(Site::kParseErrorReturn);
          }
          throw ParserException{target.name};
        case ParserTarget::Kind::kControl: {
          ctx.hit(Site::kParseReturnControl);
          if (std::optional<std::string> ex = verify_calculated_fields(ctx)) {
            throw ParserException{*ex};
          }
          ParseOutcome out;
          out.control = target.id;
          return out;
        }
      }
    }
  } catch (const ParserException& e) {
    return handle_parser_exception(ctx, e.name);
  }
}

}  // namespace p4sem
