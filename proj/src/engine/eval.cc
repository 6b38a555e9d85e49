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


#include <algorithm>

#include "p4sem/checksum/checksum.h"
#include "p4sem/common/error.h"
#include "p4sem/engine/exec.h"

namespace p4sem {

namespace {

BigInt slice_max(const Value& v) { return low_mask(v.slice_width()); }

[[noreturn]] void unsupported(const std::string& site, const std::string& what) {
  throw Stuck(StuckReason::kSymbolicUnsupported, site + ": " + what);
}

// Decides lo <= x <= hi for a symbolic (unsigned) slice.
bool symbolic_range(ExecContext& ctx, const Value& x, BigInt lo, BigInt hi,
                    const std::string& site) {
  const BigInt max = slice_max(x);
  if (lo < 0) lo = 0;
  if (hi > max) hi = max;
  if (lo > hi) return false;
  if (lo == 0 && hi == max) return true;
  if (lo == hi) return ctx.branch(Constraint::eq(x.atom(), x.slice_width(), lo, x.slice_lo()), site);
  return ctx.branch(Constraint::range(x.atom(), x.slice_width(), lo, hi, x.slice_lo()), site);
}

// Comparison of a symbolic unsigned value with a non-negative constant.
bool symbolic_compare(ExecContext& ctx, BinOp op, const Value& x, const BigInt& k,
                      const std::string& site) {
  const BigInt max = slice_max(x);
  switch (op) {
    case BinOp::kEq:
      return symbolic_range(ctx, x, k, k, site);
    case BinOp::kNe:
      return !symbolic_range(ctx, x, k, k, site);
    case BinOp::kLt:
      return k > 0 && symbolic_range(ctx, x, 0, k - 1, site);
    case BinOp::kLe:
      return symbolic_range(ctx, x, 0, k, site);
    case BinOp::kGt:
      return symbolic_range(ctx, x, k + 1, max, site);
    case BinOp::kGe:
      return symbolic_range(ctx, x, k, max, site);
    default:
      break;
  }
  throw std::logic_error("not a comparison");
}

BinOp flip(BinOp op) {
  switch (op) {
    case BinOp::kLt: return BinOp::kGt;
    case BinOp::kLe: return BinOp::kGe;
    case BinOp::kGt: return BinOp::kLt;
    case BinOp::kGe: return BinOp::kLe;
    default: return op;
  }
}

Site binop_site(BinOp op) {
  switch (op) {
    case BinOp::kAdd:
    case BinOp::kSub:
    case BinOp::kMul:
      return Site::kExprArith;
    case BinOp::kAnd:
    case BinOp::kOr:
    case BinOp::kXor:
      return Site::kExprBitwise;
    case BinOp::kShl:
    case BinOp::kShr:
      return Site::kExprShift;
    case BinOp::kLAnd:
    case BinOp::kLOr:
      return Site::kExprLogical;
    default:
      return Site::kExprCompare;
  }
}

Value eval_binary(ExecContext& ctx, const RExpr& e, const std::string& site) {
  ctx.hit(binop_site(e.binop));
  if (e.binop == BinOp::kLAnd || e.binop == BinOp::kLOr) {
    bool l = truthy(ctx, eval(ctx, *e.lhs, site), site);
    if (e.binop == BinOp::kLAnd && !l) return Value::boolean(false);
    if (e.binop == BinOp::kLOr && l) return Value::boolean(true);
    return Value::boolean(truthy(ctx, eval(ctx, *e.rhs, site), site));
  }
  Value a = eval(ctx, *e.lhs, site);
  Value b = eval(ctx, *e.rhs, site);
  if (a.is_undef() || b.is_undef()) {
    throw Stuck(StuckReason::kUndefInExpr,
                site + ": operator " + std::string(binop_symbol(e.binop)) + " on @undef");
  }
  if (is_comparison(e.binop) && (a.is_symbolic() != b.is_symbolic())) {
    const Value& sym = a.is_symbolic() ? a : b;
    const Value& con = a.is_symbolic() ? b : a;
    bool signed_cmp = sym.is_signed() || con.is_signed();
    if (!signed_cmp) {
      BinOp op = a.is_symbolic() ? e.binop : flip(e.binop);
      return Value::boolean(symbolic_compare(ctx, op, sym, con.bits(), site));
    }
  }
  if (a.is_symbolic()) a = concretize(ctx, a, site);
  if (b.is_symbolic()) b = concretize(ctx, b, site);
  try {
    return apply_binop(e.binop, a, b);
  } catch (Stuck& s) {
    s.add_context(site);
    throw;
  }
}

const FrameArg& frame_arg(ExecContext& ctx, int frame, int param, const std::string& site) {
  if (frame < 0 || frame >= static_cast<int>(ctx.frames.size()) ||
      param >= static_cast<int>(ctx.frames[frame].args.size())) {
    throw Stuck(StuckReason::kUnspecifiedPrimitiveCase, site + ": parameter outside an action");
  }
  return ctx.frames[frame].args[param];
}

struct FrameSwitch {
  FrameSwitch(ExecContext& c, int f) : ctx(c), saved(c.current_frame) { ctx.current_frame = f; }
  ~FrameSwitch() { ctx.current_frame = saved; }
  ExecContext& ctx;
  int saved;
};

Value param_value(ExecContext& ctx, int param, const std::string& site) {
  const FrameArg& arg = frame_arg(ctx, ctx.current_frame, param, site);
  if (arg.has_value) return arg.value;
  if (arg.expr) {
    RExprPtr expr = arg.expr;
    FrameSwitch sw(ctx, arg.frame);
    return eval(ctx, *expr, site);
  }
  throw Stuck(StuckReason::kUnspecifiedPrimitiveCase,
              site + ": '" + arg.name + "' used as a value");
}

}  // namespace

bool ExecContext::branch(const Constraint& c, std::string_view site) {
  SatStatus yes = pc.check_with(c);
  SatStatus no = pc.check_with(c.negated());
  if (yes == SatStatus::kUnknown || no == SatStatus::kUnknown) pc.mark_unknown();
  bool can_yes = yes != SatStatus::kUnsat;
  bool can_no = no != SatStatus::kUnsat;
  if (can_yes && can_no) {
    bool holds = choose(ChoiceKind::kSymbolicBranch, 2, site) == 0;
    pc.add(holds ? c : c.negated());
    return holds;
  }
  if (can_yes) return true;
  if (can_no) return false;
  throw Stuck(StuckReason::kSymbolicUnsupported, std::string(site) + ": infeasible path");
}

Value eval(ExecContext& ctx, const RExpr& e, const std::string& site) {
  switch (e.kind) {
    case RExpr::Kind::kConst:
      return e.constant;
    case RExpr::Kind::kField: {
      InstanceId inst = resolve_instance(ctx, e.field.instance, site);
      return get_field(ctx.cfg, inst, e.field.field, site);
    }
    case RExpr::Kind::kSelfField:
      if (ctx.self_fields == nullptr) throw std::logic_error("self field outside extraction");
      return (*ctx.self_fields)[e.index];
    case RExpr::Kind::kValid: {
      ctx.hit(Site::kExprValid);
      InstanceId inst = resolve_instance(ctx, e.instance, site);
      return Value::boolean(inst >= 0 && ctx.cfg.instances[inst].valid);
    }
    case RExpr::Kind::kParam:
      return param_value(ctx, e.index, site);
    case RExpr::Kind::kCurrent: {
      ctx.hit(Site::kParseCurrent);
      size_t start = ctx.offset + static_cast<size_t>(e.offset);
      if (!packet_has_bits(ctx, start + e.width, site)) {
        ctx.hit(Site::kParseOutOfPacket);
        throw ParserException{"p4_pe_out_of_packet"};
      }
      return read_packet(ctx, start, e.width, "", "", site);
    }
    case RExpr::Kind::kLatest:
      ctx.hit(Site::kParseLatest);
      if (ctx.latest < 0) {
        throw Stuck(StuckReason::kReadInvalidHeader, site + ": latest before any extract");
      }
      return get_field(ctx.cfg, ctx.latest, e.index, site);
    case RExpr::Kind::kUnary: {
      ctx.hit(Site::kExprUnary);
      Value a = eval(ctx, *e.lhs, site);
      if (e.unop == UnOp::kLNot) return Value::boolean(!truthy(ctx, a, site));
      if (a.is_symbolic()) a = concretize(ctx, a, site);
      try {
        return apply_unop(e.unop, a);
      } catch (Stuck& s) {
        s.add_context(site);
        throw;
      }
    }
    case RExpr::Kind::kBinary:
      return eval_binary(ctx, e, site);
  }
  throw std::logic_error("unreachable");
}

bool truthy(ExecContext& ctx, const Value& v, const std::string& site) {
  if (v.is_undef()) throw Stuck(StuckReason::kUndefInExpr, site + ": condition is @undef");
  if (v.is_symbolic()) return !symbolic_range(ctx, v, 0, 0, site);
  return v.is_true();
}

Value concretize(ExecContext& ctx, const Value& v, const std::string& site) {
  if (v.is_undef()) throw Stuck(StuckReason::kUndefInExpr, site + ": @undef operand");
  if (!v.is_symbolic()) return v;
  constexpr int kMaxValues = 256;
  const AtomInfo& atom = ctx.pc.atoms()[v.atom()];
  std::vector<Constraint> cs;
  for (const Constraint& c : ctx.pc.constraints()) {
    if (c.atom == v.atom()) cs.push_back(c);
  }
  std::vector<BigInt> values;
  while (true) {
    SatResult r = atom_sat(v.atom(), atom.width, cs);
    if (r.status == SatStatus::kUnknown) unsupported(site, "cannot enumerate " + atom.name);
    if (r.status == SatStatus::kUnsat) break;
    BigInt s = (r.witness[v.atom()] >> v.slice_lo()) & slice_max(v);
    values.push_back(s);
    if (static_cast<int>(values.size()) > kMaxValues) {
      unsupported(site, "too many feasible values of " + atom.name);
    }
    cs.push_back(Constraint::neq(v.atom(), v.slice_width(), s, v.slice_lo()));
  }
  if (values.empty()) unsupported(site, "infeasible path");
  std::sort(values.begin(), values.end());
  int pick = ctx.choose(ChoiceKind::kSymbolicBranch, static_cast<int>(values.size()), site);
  if (values.size() > 1) {
    ctx.pc.add(Constraint::eq(v.atom(), v.slice_width(), values[pick], v.slice_lo()));
  }
  return Value::concrete(v.width(), values[pick], v.is_signed());
}

bool match_ternary(ExecContext& ctx, const Value& x, const BigInt& v, const BigInt& mask,
                   const std::string& site) {
  if (x.is_undef()) throw Stuck(StuckReason::kUndefInExpr, site + ": match on @undef");
  if (!x.is_symbolic()) return ((x.bits() ^ v) & mask) == 0;
  const BigInt low = low_mask(x.slice_width());
  // Bits above the slice are zero.
  if ((v & mask & ~low) != 0) return false;
  BigInt m = mask & low;
  if (m == 0) return true;
  if (m == low) return symbolic_range(ctx, x, v & low, v & low, site);
  return ctx.branch(Constraint::ternary(x.atom(), x.slice_width(), v & m, m, x.slice_lo()), site);
}

bool match_range(ExecContext& ctx, const Value& x, const BigInt& lo, const BigInt& hi,
                 const std::string& site) {
  if (x.is_undef()) throw Stuck(StuckReason::kUndefInExpr, site + ": match on @undef");
  if (!x.is_symbolic()) return lo <= x.bits() && x.bits() <= hi;
  return symbolic_range(ctx, x, lo, hi, site);
}

InstanceId resolve_instance(ExecContext& ctx, const InstanceRef& ref, const std::string& site) {
  switch (ref.kind) {
    case InstanceRef::Kind::kStatic:
      return ref.id;
    case InstanceRef::Kind::kNext: {
      InstanceId id = stack_next(ctx.cfg, ref.stack);
      if (id < 0) {
        throw Stuck(StuckReason::kBadStackOp,
                    site + ": " + ctx.program.stacks[ref.stack].name + "[next] on a full stack");
      }
      return id;
    }
    case InstanceRef::Kind::kLast: {
      InstanceId id = stack_last(ctx.cfg, ref.stack);
      if (id < 0) {
        throw Stuck(StuckReason::kBadStackOp,
                    site + ": " + ctx.program.stacks[ref.stack].name + "[last] on an empty stack");
      }
      return id;
    }
  }
  return -1;
}

FieldTarget resolve_lvalue(ExecContext& ctx, const RExpr& e, const std::string& site) {
  if (e.kind == RExpr::Kind::kField) {
    return {resolve_instance(ctx, e.field.instance, site), e.field.field};
  }
  if (e.kind == RExpr::Kind::kParam) {
    const FrameArg& arg = frame_arg(ctx, ctx.current_frame, e.index, site);
    if (arg.expr) {
      RExprPtr expr = arg.expr;
      FrameSwitch sw(ctx, arg.frame);
      return resolve_lvalue(ctx, *expr, site);
    }
  }
  throw Stuck(StuckReason::kUnspecifiedPrimitiveCase, site + ": destination is not a field");
}

std::string resolve_object_name(ExecContext& ctx, int param, const std::string& site) {
  const FrameArg& arg = frame_arg(ctx, ctx.current_frame, param, site);
  if (!arg.name.empty()) return arg.name;
  if (arg.expr && arg.expr->kind == RExpr::Kind::kParam) {
    int inner = arg.expr->index;
    FrameSwitch sw(ctx, arg.frame);
    return resolve_object_name(ctx, inner, site);
  }
  throw Stuck(StuckReason::kUnspecifiedPrimitiveCase, site + ": argument is not an object name");
}

BitString serialize_field_list(ExecContext& ctx, const std::vector<FlatItem>& items,
                               const std::string& site) {
  BitString bits;
  for (const FlatItem& item : items) {
    if (item.is_const) {
      bits.append(item.constant.bits(), item.constant.width());
      continue;
    }
    InstanceId inst = resolve_instance(ctx, item.field.instance, site);
    Value v = get_field(ctx.cfg, inst, item.field.field, site);
    if (v.is_undef()) {
      throw Stuck(StuckReason::kUndefInExpr,
                  site + ": " + ctx.program.instances[inst].name + " field list value is @undef");
    }
    v = concretize(ctx, v, site);
    if (v.width() > 0) bits.append(v.bits(), v.width());
  }
  return bits;
}

std::vector<CarriedField> capture_field_list(ExecContext& ctx, int list, const std::string& site) {
  std::vector<CarriedField> out;
  for (const FlatItem& item : flatten_field_list(ctx.program, list)) {
    if (item.is_const) continue;
    InstanceId inst = resolve_instance(ctx, item.field.instance, site);
    if (!ctx.cfg.instances[inst].valid) continue;
    out.push_back({inst, item.field.field, ctx.cfg.instances[inst].fields[item.field.field]});
  }
  return out;
}

BigInt compute_calculation(ExecContext& ctx, int calculation, const std::string& site) {
  const CalculationInfo& calc = ctx.program.calculations[calculation];
  BitString bits;
  for (int list : calc.inputs) {
    bits.append_bits(serialize_field_list(ctx, flatten_field_list(ctx.program, list), site));
  }
  static constexpr Site kHashSites[] = {Site::kHashCsum16, Site::kHashCrc16, Site::kHashCrc32,
                                        Site::kHashXor16, Site::kHashIdentity};
  ctx.hit(kHashSites[static_cast<int>(calc.algorithm)]);
  try {
    return compute_hash(calc.algorithm, bits, calc.output_width);
  } catch (const Error& e) {
    throw Stuck(StuckReason::kUnspecifiedPrimitiveCase, site + ": " + e.message());
  }
}

}  // namespace p4sem
