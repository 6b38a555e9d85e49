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


#include "p4sem/match_action/match_action.h"

#include <algorithm>

namespace p4sem {

namespace {

[[noreturn]] void unspecified(const std::string& site, const std::string& what) {
  throw Stuck(StuckReason::kUnspecifiedPrimitiveCase, site + ": " + what);
}

Value arg_value(ExecContext& ctx, const RCall& call, size_t i) {
  return eval(ctx, *call.args[i].expr, call.site);
}

Value arg_concrete(ExecContext& ctx, const RCall& call, size_t i) {
  return concretize(ctx, arg_value(ctx, call, i), call.site);
}

int64_t arg_int(ExecContext& ctx, const RCall& call, size_t i) {
  BigInt v = arg_concrete(ctx, call, i).as_integer();
  if (v > BigInt(INT64_MAX)) return INT64_MAX;
  if (v < BigInt(INT64_MIN)) return INT64_MIN;
  return static_cast<int64_t>(v);
}

FieldTarget arg_field(ExecContext& ctx, const RCall& call, size_t i) {
  return resolve_lvalue(ctx, *call.args[i].expr, call.site);
}

InstanceId instance_by_name(ExecContext& ctx, const std::string& name, const std::string& site) {
  InstanceId id = ctx.program.instance_id(name);
  if (id >= 0) return id;
  size_t open = name.find('[');
  if (open != std::string::npos) {
    int stack = ctx.program.stack_id(name.substr(0, open));
    std::string idx = name.substr(open);
    if (stack >= 0 && idx == "[last]") {
      InstanceRef ref{InstanceRef::Kind::kLast, -1, stack};
      return resolve_instance(ctx, ref, site);
    }
    if (stack >= 0 && idx == "[next]") {
      InstanceRef ref{InstanceRef::Kind::kNext, -1, stack};
      return resolve_instance(ctx, ref, site);
    }
  }
  unspecified(site, "'" + name + "' is not a header instance");
}

InstanceId arg_instance(ExecContext& ctx, const RCall& call, size_t i) {
  const RArg& a = call.args[i];
  if (a.param) return instance_by_name(ctx, resolve_object_name(ctx, a.param_index, call.site), call.site);
  return resolve_instance(ctx, a.instance, call.site);
}

// Stack, field list, calculation or stateful argument.
int arg_object(ExecContext& ctx, const RCall& call, size_t i) {
  const RArg& a = call.args[i];
  if (!a.param) return a.id;
  std::string name = resolve_object_name(ctx, a.param_index, call.site);
  const Program& p = ctx.program;
  int id = -1;
  switch (a.role) {
    case ArgRole::kStack: id = p.stack_id(name); break;
    case ArgRole::kFieldList: id = p.field_list_id(name); break;
    case ArgRole::kCalculation: id = p.calculation_id(name); break;
    case ArgRole::kRegister:
    case ArgRole::kCounter:
    case ArgRole::kMeter: {
      id = p.stateful_id(name);
      StatefulKind want = a.role == ArgRole::kRegister  ? StatefulKind::kRegister
                          : a.role == ArgRole::kCounter ? StatefulKind::kCounter
                                                        : StatefulKind::kMeter;
      if (id >= 0 && p.statefuls[id].kind != want) id = -1;
      break;
    }
    default: break;
  }
  if (id < 0) {
    unspecified(call.site, "'" + name + "' is not a " + std::string(arg_role_name(a.role)));
  }
  return id;
}

void write_field(ExecContext& ctx, const FieldTarget& t, const Value& v, const std::string& site) {
  set_field(ctx.cfg, t.instance, t.field, v, site);
}

int field_width(ExecContext& ctx, const FieldTarget& t) {
  return ctx.program.type_of(t.instance).fields[t.field].width;
}

Value binop(BinOp op, const Value& a, const Value& b, const std::string& site) {
  try {
    return apply_binop(op, a, b);
  } catch (Stuck& s) {
    s.add_context(site);
    throw;
  }
}

uint64_t packet_bytes(ExecContext& ctx, const std::string& site) {
  Value len = packet_length_value(ctx);
  if (len.is_undef()) return 0;
  return concretize(ctx, len, site).as_u64();
}

// dst = a op b, with symbolic operands concretized.
void arith3(ExecContext& ctx, const RCall& call, BinOp op) {
  FieldTarget dst = arg_field(ctx, call, 0);
  Value a = arg_concrete(ctx, call, 1);
  Value b = arg_concrete(ctx, call, 2);
  write_field(ctx, dst, binop(op, a, b, call.site), call.site);
}

void shift3(ExecContext& ctx, const RCall& call, BinOp op) {
  FieldTarget dst = arg_field(ctx, call, 0);
  Value a = arg_concrete(ctx, call, 1);
  Value n = arg_concrete(ctx, call, 2);
  if (n.as_integer() < 0) unspecified(call.site, "negative shift amount");
  write_field(ctx, dst, binop(op, a, n.with_signedness(false), call.site), call.site);
}

std::vector<CarriedField> optional_list(ExecContext& ctx, const RCall& call, size_t i) {
  if (call.args.size() <= i) return {};
  return capture_field_list(ctx, arg_object(ctx, call, i), call.site);
}

Site primitive_site(PrimitiveOp op) {
  switch (op) {
    case PrimitiveOp::kModifyField: return Site::kPrimModifyField;
    case PrimitiveOp::kAddToField: return Site::kPrimAddToField;
    case PrimitiveOp::kSubtractFromField: return Site::kPrimSubtractFromField;
    case PrimitiveOp::kAdd: return Site::kPrimAdd;
    case PrimitiveOp::kSubtract: return Site::kPrimSubtract;
    case PrimitiveOp::kBitAnd: return Site::kPrimBitAnd;
    case PrimitiveOp::kBitOr: return Site::kPrimBitOr;
    case PrimitiveOp::kBitXor: return Site::kPrimBitXor;
    case PrimitiveOp::kShiftLeft: return Site::kPrimShiftLeft;
    case PrimitiveOp::kShiftRight: return Site::kPrimShiftRight;
    case PrimitiveOp::kAddHeader: return Site::kPrimAddHeader;
    case PrimitiveOp::kRemoveHeader: return Site::kPrimRemoveHeader;
    case PrimitiveOp::kCopyHeader: return Site::kPrimCopyHeader;
    case PrimitiveOp::kPush: return Site::kPrimPush;
    case PrimitiveOp::kPop: return Site::kPrimPop;
    case PrimitiveOp::kRegisterRead: return Site::kPrimRegisterRead;
    case PrimitiveOp::kRegisterWrite: return Site::kPrimRegisterWrite;
    case PrimitiveOp::kCount: return Site::kPrimCount;
    case PrimitiveOp::kExecuteMeter: return Site::kPrimExecuteMeter;
    case PrimitiveOp::kDrop: return Site::kPrimDrop;
    case PrimitiveOp::kNoOp: return Site::kPrimNoOp;
    case PrimitiveOp::kTruncate: return Site::kPrimTruncate;
    case PrimitiveOp::kModifyFieldWithHashBasedOffset: return Site::kPrimHashOffset;
    case PrimitiveOp::kResubmit: return Site::kPrimResubmit;
    case PrimitiveOp::kRecirculate: return Site::kPrimRecirculate;
    case PrimitiveOp::kCloneI2I: return Site::kPrimCloneI2I;
    case PrimitiveOp::kCloneE2I: return Site::kPrimCloneE2I;
    case PrimitiveOp::kCloneI2E: return Site::kPrimCloneI2E;
    case PrimitiveOp::kCloneE2E: return Site::kPrimCloneE2E;
    case PrimitiveOp::kGenerateDigest: return Site::kPrimDigest;
  }
  return Site::kPrimNoOp;
}

void exec_block(ExecContext& ctx, const RBlock& block);

void run_case(ExecContext& ctx, const RApplyCase& c, Site site) {
  ctx.hit(site);
  exec_block(ctx, *c.body);
}

void exec_apply(ExecContext& ctx, const RStmt& s) {
  ctx.hit(Site::kControlApply);
  ApplyResult r = apply_table(ctx, s.table, s.site);
  if (s.case_kind == ast::ApplyStmt::CaseKind::kHitMiss) {
    for (const RApplyCase& c : s.cases) {
      if (c.label == "hit" && r.hit) return run_case(ctx, c, Site::kApplyHitCase);
      if (c.label == "miss" && !r.hit) return run_case(ctx, c, Site::kApplyMissCase);
    }
  } else if (s.case_kind == ast::ApplyStmt::CaseKind::kAction) {
    for (const RApplyCase& c : s.cases) {
      if (c.action >= 0 && c.action == r.action) return run_case(ctx, c, Site::kApplyActionCase);
    }
    for (const RApplyCase& c : s.cases) {
      if (c.label == "default") return run_case(ctx, c, Site::kApplyDefaultCase);
    }
  }
}

void exec_block(ExecContext& ctx, const RBlock& block) {
  for (const RStmt& s : block.stmts) {
    switch (s.kind) {
      case RStmt::Kind::kApply:
        exec_apply(ctx, s);
        break;
      case RStmt::Kind::kIf:
        if (truthy(ctx, eval(ctx, *s.condition, s.site), s.site)) {
          ctx.hit(Site::kControlIfTrue);
          exec_block(ctx, *s.then_block);
        } else {
          ctx.hit(Site::kControlIfFalse);
          if (s.else_block) exec_block(ctx, **s.else_block);
        }
        break;
      case RStmt::Kind::kCall:
        ctx.hit(Site::kControlCall);
        exec_control(ctx, s.control);
        break;
    }
  }
}

}  // namespace

std::vector<Value> table_keys(ExecContext& ctx, int table, const std::string& site) {
  std::vector<Value> keys;
  for (const TableReadInfo& r : ctx.program.tables[table].reads) {
    if (r.kind == MatchKind::kValid) {
      InstanceId inst = -1;
      if (r.instance.kind == InstanceRef::Kind::kStatic) {
        inst = r.instance.id;
      } else if (r.instance.kind == InstanceRef::Kind::kLast) {
        inst = stack_last(ctx.cfg, r.instance.stack);
      }
      keys.push_back(Value::boolean(inst >= 0 && ctx.cfg.instances[inst].valid));
      continue;
    }
    Value v = eval(ctx, *r.target, site);
    if (v.is_undef()) {
      throw Stuck(StuckReason::kUndefInExpr, site + ": table key " + r.text + " is @undef");
    }
    keys.push_back(v);
  }
  return keys;
}

bool match_entry(ExecContext& ctx, int table, const TableEntry& entry,
                 const std::vector<Value>& keys, const std::string& site) {
  const TableInfo& t = ctx.program.tables[table];
  for (size_t i = 0; i < t.reads.size(); ++i) {
    const TableReadInfo& r = t.reads[i];
    const MatchSpec& m = entry.matches[i];
    const BigInt rm = r.mask ? *r.mask : low_mask(r.width);
    bool ok = false;
    switch (r.kind) {
      case MatchKind::kExact:
        ctx.hit(Site::kMatchExact);
        ok = match_ternary(ctx, keys[i], m.value, rm, site);
        break;
      case MatchKind::kTernary:
        ctx.hit(Site::kMatchTernary);
        ok = match_ternary(ctx, keys[i], m.value, m.mask & rm, site);
        break;
      case MatchKind::kLpm:
        ctx.hit(Site::kMatchLpm);
        ok = match_ternary(ctx, keys[i], m.value, m.mask & rm, site);
        break;
      case MatchKind::kRange:
        ctx.hit(Site::kMatchRange);
        if (r.mask) {
          Value x = concretize(ctx, keys[i], site);
          BigInt v = x.bits() & rm;
          ok = m.value <= v && v <= m.hi;
        } else {
          ok = match_range(ctx, keys[i], m.value, m.hi, site);
        }
        break;
      case MatchKind::kValid:
        ctx.hit(Site::kMatchValid);
        ok = keys[i].bits() == m.value;
        break;
    }
    if (!ok) return false;
  }
  return true;
}

ApplyResult apply_table(ExecContext& ctx, int table, const std::string& site) {
  const TableInfo& t = ctx.program.tables[table];
  std::vector<Value> keys = table_keys(ctx, table, site);
  ApplyResult result;
  const std::vector<TableEntry>& entries = ctx.cfg.tables[table].entries;
  for (size_t e = 0; e < entries.size(); ++e) {
    if (!match_entry(ctx, table, entries[e], keys, site)) continue;
    // Copy: the action may not modify tables, but keep the entry stable.
    TableEntry entry = entries[e];
    ctx.hit(Site::kTableHit);
    result.hit = true;
    result.action = entry.action;
    std::vector<FrameArg> args;
    for (const Value& v : entry.args) {
      FrameArg a;
      a.has_value = true;
      a.value = v;
      args.push_back(std::move(a));
    }
    exec_action(ctx, entry.action, std::move(args), t.name + "/" + ctx.program.actions[entry.action].name);
    int k = static_cast<int>(t.direct_statefuls.size());
    if (k > 0) {
      int pick = ctx.choose(ChoiceKind::kStatefulUpdateOrder, static_cast<int>(factorial(k)),
                            t.name + " direct statefuls");
      for (int i : nth_permutation(k, pick)) {
        int s = t.direct_statefuls[i];
        const StatefulInfo& info = ctx.program.statefuls[s];
        if (info.kind == StatefulKind::kCounter) {
          ctx.hit(Site::kDirectCounter);
          count_increment(ctx.cfg, s, entry.id, packet_bytes(ctx, site), site);
        } else if (info.kind == StatefulKind::kMeter) {
          ctx.hit(Site::kDirectMeter);
          meter_execute(ctx.cfg, s, entry.id, site);
        }
      }
    }
    return result;
  }
  const auto& def = ctx.cfg.tables[table].default_action;
  if (def) {
    ctx.hit(Site::kTableMissDefault);
    result.action = def->action;
    std::vector<FrameArg> args;
    for (const Value& v : def->args) {
      FrameArg a;
      a.has_value = true;
      a.value = v;
      args.push_back(std::move(a));
    }
    ActionCallSpec call = *def;
    exec_action(ctx, call.action, std::move(args), t.name + "/" + ctx.program.actions[call.action].name);
  } else {
    ctx.hit(Site::kTableMissNone);
  }
  return result;
}

void exec_action(ExecContext& ctx, int action, std::vector<FrameArg> args,
                 const std::string& site) {
  if (static_cast<int>(ctx.frames.size()) >= ctx.options.max_call_depth) {
    throw Stuck(StuckReason::kCallDepth,
                site + ": action call depth exceeds " + std::to_string(ctx.options.max_call_depth));
  }
  ctx.frames.push_back({action, std::move(args)});
  int saved = ctx.current_frame;
  ctx.current_frame = static_cast<int>(ctx.frames.size()) - 1;
  const ActionInfo& info = ctx.program.actions[action];
  try {
    for (const RCall& call : info.body) exec_call(ctx, call);
  } catch (...) {
    ctx.current_frame = saved;
    ctx.frames.pop_back();
    throw;
  }
  ctx.current_frame = saved;
  ctx.frames.pop_back();
}

void exec_call(ExecContext& ctx, const RCall& call) {
  if (call.primitive != nullptr) {
    exec_primitive(ctx, call);
    return;
  }
  if (call.action >= 0) {
    ctx.hit(Site::kActionNested);
    std::vector<FrameArg> args;
    for (const RArg& a : call.args) {
      FrameArg fa;
      if (a.expr) {
        fa.expr = a.expr;
        fa.frame = ctx.current_frame;
      } else {
        fa.name = a.name_text;
      }
      args.push_back(std::move(fa));
    }
    exec_action(ctx, call.action, std::move(args), call.site);
    return;
  }
  auto it = ctx.profile.primitives.find(call.name);
  if (it == ctx.profile.primitives.end()) {
    throw Stuck(StuckReason::kUnknownPrimitive,
                call.site + ": no primitive or target extern '" + call.name + "'");
  }
  ctx.hit(Site::kActionExtern);
  std::vector<Value> values;
  for (size_t i = 0; i < call.args.size(); ++i) values.push_back(arg_value(ctx, call, i));
  it->second(ctx.cfg, values);
}

void exec_primitive(ExecContext& ctx, const RCall& call) {
  const std::string& site = call.site;
  const PrimitiveOp op = call.primitive->op;
  ctx.hit(primitive_site(op));
  switch (op) {
    case PrimitiveOp::kModifyField: {
      FieldTarget dst = arg_field(ctx, call, 0);
      Value v = arg_value(ctx, call, 1);
      if (call.args.size() < 3) {
        write_field(ctx, dst, v, site);
        return;
      }
      ctx.hit(Site::kPrimModifyFieldMasked);
      const FieldInfo& fi = ctx.program.type_of(dst.instance).fields[dst.field];
      Value old = get_field(ctx.cfg, dst.instance, dst.field, site);
      if (old.is_undef()) {
        throw Stuck(StuckReason::kUndefInExpr, site + ": masked write into an @undef field");
      }
      old = concretize(ctx, old, site);
      Value val = fit_to_field(concretize(ctx, v, site), fi.width, false);
      Value mask = fit_to_field(arg_concrete(ctx, call, 2), fi.width, false);
      BigInt bits = (old.bits() & ~mask.bits() & low_mask(fi.width)) | (val.bits() & mask.bits());
      write_field(ctx, dst, Value::concrete(fi.width, bits, fi.is_signed), site);
      return;
    }
    case PrimitiveOp::kAddToField:
    case PrimitiveOp::kSubtractFromField: {
      FieldTarget dst = arg_field(ctx, call, 0);
      Value old = concretize(ctx, get_field(ctx.cfg, dst.instance, dst.field, site), site);
      Value v = arg_concrete(ctx, call, 1);
      BinOp bop = op == PrimitiveOp::kAddToField ? BinOp::kAdd : BinOp::kSub;
      write_field(ctx, dst, binop(bop, old, v, site), site);
      return;
    }
    case PrimitiveOp::kAdd: return arith3(ctx, call, BinOp::kAdd);
    case PrimitiveOp::kSubtract: return arith3(ctx, call, BinOp::kSub);
    case PrimitiveOp::kBitAnd: return arith3(ctx, call, BinOp::kAnd);
    case PrimitiveOp::kBitOr: return arith3(ctx, call, BinOp::kOr);
    case PrimitiveOp::kBitXor: return arith3(ctx, call, BinOp::kXor);
    case PrimitiveOp::kShiftLeft: return shift3(ctx, call, BinOp::kShl);
    case PrimitiveOp::kShiftRight: return shift3(ctx, call, BinOp::kShr);
    case PrimitiveOp::kAddHeader:
      add_header(ctx.cfg, arg_instance(ctx, call, 0));
      return;
    case PrimitiveOp::kRemoveHeader:
      remove_header(ctx.cfg, arg_instance(ctx, call, 0));
      return;
    case PrimitiveOp::kCopyHeader: {
      InstanceId dst = arg_instance(ctx, call, 0);
      InstanceId src = arg_instance(ctx, call, 1);
      copy_header(ctx.cfg, dst, src, site);
      return;
    }
    case PrimitiveOp::kPush:
    case PrimitiveOp::kPop: {
      int stack = arg_object(ctx, call, 0);
      int64_t count = call.args.size() > 1 ? arg_int(ctx, call, 1) : 1;
      if (op == PrimitiveOp::kPush) {
        stack_push(ctx.cfg, stack, count, site);
      } else {
        if (count > stack_valid_count(ctx.cfg, stack) &&
            count <= static_cast<int64_t>(ctx.program.stacks[stack].elements.size())) {
          unspecified(site, "pop of " + std::to_string(count) + " from a stack with " +
                                std::to_string(stack_valid_count(ctx.cfg, stack)) +
                                " valid elements");
        }
        stack_pop(ctx.cfg, stack, count, site);
      }
      return;
    }
    case PrimitiveOp::kRegisterRead: {
      FieldTarget dst = arg_field(ctx, call, 0);
      int reg = arg_object(ctx, call, 1);
      int64_t index = arg_int(ctx, call, 2);
      write_field(ctx, dst, register_read(ctx.cfg, reg, index, site), site);
      return;
    }
    case PrimitiveOp::kRegisterWrite: {
      int reg = arg_object(ctx, call, 0);
      int64_t index = arg_int(ctx, call, 1);
      Value v = arg_value(ctx, call, 2);
      if (v.is_symbolic()) v = concretize(ctx, v, site);
      register_write(ctx.cfg, reg, index, v, site);
      return;
    }
    case PrimitiveOp::kCount: {
      int counter = arg_object(ctx, call, 0);
      int64_t index = arg_int(ctx, call, 1);
      count_increment(ctx.cfg, counter, index, packet_bytes(ctx, site), site);
      return;
    }
    case PrimitiveOp::kExecuteMeter: {
      int meter = arg_object(ctx, call, 0);
      int64_t index = arg_int(ctx, call, 1);
      arg_field(ctx, call, 2);
      meter_execute(ctx.cfg, meter, index, site);
      return;
    }
    case PrimitiveOp::kDrop:
      ctx.dropped = true;
      return;
    case PrimitiveOp::kNoOp:
      return;
    case PrimitiveOp::kTruncate: {
      int64_t n = arg_int(ctx, call, 0);
      if (n < 0) unspecified(site, "negative truncate length");
      ctx.truncate_bytes = n;
      return;
    }
    case PrimitiveOp::kModifyFieldWithHashBasedOffset: {
      FieldTarget dst = arg_field(ctx, call, 0);
      Value base = arg_concrete(ctx, call, 1);
      BigInt h = compute_calculation(ctx, arg_object(ctx, call, 2), site);
      BigInt size = arg_concrete(ctx, call, 3).as_integer();
      if (size <= 0) unspecified(site, "hash offset size must be positive");
      BigInt v = base.as_integer() + h % size;
      write_field(ctx, dst, Value::from_int(field_width(ctx, dst), v), site);
      return;
    }
    case PrimitiveOp::kResubmit:
      ctx.resubmit = optional_list(ctx, call, 0);
      return;
    case PrimitiveOp::kRecirculate:
      ctx.recirculate = optional_list(ctx, call, 0);
      return;
    case PrimitiveOp::kCloneI2I:
    case PrimitiveOp::kCloneE2I:
    case PrimitiveOp::kCloneI2E:
    case PrimitiveOp::kCloneE2E: {
      bool egress_op = op == PrimitiveOp::kCloneE2I || op == PrimitiveOp::kCloneE2E;
      if (egress_op != ctx.in_egress) {
        unspecified(site, call.name + " outside its pipeline stage");
      }
      PendingClone c;
      c.op = op;
      c.session = arg_concrete(ctx, call, 0).bits();
      c.fields = optional_list(ctx, call, 1);
      ctx.clones.push_back(std::move(c));
      return;
    }
    case PrimitiveOp::kGenerateDigest: {
      DigestRecord d;
      d.receiver = arg_concrete(ctx, call, 0).bits();
      for (const CarriedField& f : optional_list(ctx, call, 1)) d.values.push_back(f.value);
      ctx.cfg.digests.push_back(std::move(d));
      return;
    }
  }
}

void exec_control(ExecContext& ctx, int control) {
  if (static_cast<int>(ctx.frames.size()) >= ctx.options.max_call_depth) {
    throw Stuck(StuckReason::kCallDepth, ctx.program.controls[control].name + ": call depth");
  }
  ctx.frames.push_back({-1, {}});
  try {
    exec_block(ctx, ctx.program.controls[control].body);
  } catch (...) {
    ctx.frames.pop_back();
    throw;
  }
  ctx.frames.pop_back();
}

}  // namespace p4sem
