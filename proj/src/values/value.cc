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


#include "p4sem/values/value.h"

#include <algorithm>
#include <stdexcept>

#include "p4sem/common/error.h"
#include "p4sem/common/stuck.h"

namespace p4sem {

Value Value::concrete(int width, BigInt bits, bool is_signed) {
  if (width < 1) throw std::invalid_argument("value width must be >= 1");
  if (bits < 0 || bits > low_mask(width)) {
    throw std::invalid_argument("concrete bits exceed width " + std::to_string(width));
  }
  Value v;
  v.kind_ = Kind::kConcrete;
  v.width_ = width;
  v.signed_ = is_signed;
  v.bits_ = std::move(bits);
  return v;
}

Value Value::from_int(int width, const BigInt& v, bool is_signed) {
  BigInt modulus = BigInt(1) << width;
  BigInt bits = v % modulus;
  if (bits < 0) bits += modulus;
  return concrete(width, bits, is_signed);
}

Value Value::empty_varbit() {
  Value v;
  v.kind_ = Kind::kConcrete;
  return v;
}

Value Value::symbolic(AtomId atom, int slice_lo, int slice_width, int width,
                      bool is_signed) {
  if (slice_width < 1 || width < slice_width) {
    throw std::invalid_argument("bad symbolic slice");
  }
  Value v;
  v.kind_ = Kind::kSymbolic;
  v.width_ = width;
  v.signed_ = is_signed;
  v.atom_ = atom;
  v.slice_lo_ = slice_lo;
  v.slice_width_ = slice_width;
  return v;
}

BigInt Value::as_integer() const {
  if (!signed_ || width_ == 0) return bits_;
  if (bit_test(bits_, width_ - 1)) return bits_ - (BigInt(1) << width_);
  return bits_;
}

Value Value::with_signedness(bool is_signed) const {
  Value v = *this;
  if (kind_ != Kind::kUndef) v.signed_ = is_signed;
  return v;
}

std::string Value::to_string() const {
  switch (kind_) {
    case Kind::kUndef:
      return "@undef";
    case Kind::kConcrete:
      return std::to_string(width_) + (signed_ ? "s" : "w") + to_hex(bits_);
    case Kind::kSymbolic:
      return "$" + std::to_string(atom_) + "[" + std::to_string(slice_lo_) + "+:" +
             std::to_string(slice_width_) + "]:" + std::to_string(width_);
  }
  return "?";
}

std::string_view binop_symbol(BinOp op) {
  switch (op) {
    case BinOp::kAdd: return "+";
    case BinOp::kSub: return "-";
    case BinOp::kMul: return "*";
    case BinOp::kAnd: return "&";
    case BinOp::kOr: return "|";
    case BinOp::kXor: return "^";
    case BinOp::kShl: return "<<";
    case BinOp::kShr: return ">>";
    case BinOp::kEq: return "==";
    case BinOp::kNe: return "!=";
    case BinOp::kLt: return "<";
    case BinOp::kLe: return "<=";
    case BinOp::kGt: return ">";
    case BinOp::kGe: return ">=";
    case BinOp::kLAnd: return "and";
    case BinOp::kLOr: return "or";
  }
  return "?";
}

std::string_view unop_symbol(UnOp op) {
  switch (op) {
    case UnOp::kNeg: return "-";
    case UnOp::kBitNot: return "~";
    case UnOp::kLNot: return "not";
  }
  return "?";
}

bool is_comparison(BinOp op) {
  switch (op) {
    case BinOp::kEq: case BinOp::kNe: case BinOp::kLt:
    case BinOp::kLe: case BinOp::kGt: case BinOp::kGe:
      return true;
    default:
      return false;
  }
}

Value infer_const_width(const ConstExpr& c) {
  const int natural = std::max(1, bit_length(c.magnitude));
  switch (c.sign) {
    case ConstSign::kPlain: {
      if (c.width) {
        if (bit_length(c.magnitude) > *c.width) {
          throw Error(ErrorCode::kWidthOverflow,
                      to_hex(c.magnitude) + " does not fit in " +
                          std::to_string(*c.width) + " bits");
        }
        return Value::concrete(*c.width, c.magnitude);
      }
      return Value::concrete(natural, c.magnitude);
    }
    case ConstSign::kNegativeLiteral: {
      int width = c.width ? *c.width : bit_length(c.magnitude) + 1;
      if (width < 1) width = 1;
      // Two's complement range: -2^(w-1) .. 2^(w-1)-1.
      if (c.width && c.magnitude > (BigInt(1) << (width - 1))) {
        throw Error(ErrorCode::kWidthOverflow,
                    "-" + to_hex(c.magnitude) + " does not fit in " +
                        std::to_string(width) + " signed bits");
      }
      return Value::from_int(width, -BigInt(c.magnitude), true);
    }
    case ConstSign::kNegatedExpression: {
      int width = c.width ? *c.width : natural;
      if (bit_length(c.magnitude) > width) {
        throw Error(ErrorCode::kWidthOverflow, "operand does not fit its width");
      }
      return Value::from_int(width, -BigInt(c.magnitude), false);
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

void require_concrete(const Value& v, std::string_view what) {
  if (v.is_undef()) {
    throw Stuck(StuckReason::kUndefInExpr, std::string(what));
  }
  if (v.is_symbolic()) {
    throw std::logic_error("symbolic operand reached concrete arithmetic");
  }
}

// Re-encodes `v` at a wider width, sign-extending when signed.
BigInt extend_bits(const Value& v, int width) {
  if (v.width() >= width) return v.bits() & low_mask(width);
  if (v.is_signed()) return Value::from_int(width, v.as_integer()).bits();
  return v.bits();
}

}  // namespace

Value apply_binop(BinOp op, const Value& a, const Value& b) {
  std::string what = "operator " + std::string(binop_symbol(op));
  require_concrete(a, what);
  require_concrete(b, what);
  const int width = std::max(a.width(), b.width());
  const bool is_signed = a.is_signed() || b.is_signed();
  const Value pa = Value::concrete(width, extend_bits(a, width), is_signed);
  const Value pb = Value::concrete(width, extend_bits(b, width), is_signed);
  const BigInt& x = pa.bits();
  const BigInt& y = pb.bits();
  switch (op) {
    case BinOp::kAdd: return Value::from_int(width, x + y, is_signed);
    case BinOp::kSub: return Value::from_int(width, x - y, is_signed);
    case BinOp::kMul: return Value::from_int(width, x * y, is_signed);
    case BinOp::kAnd: return Value::concrete(width, x & y, is_signed);
    case BinOp::kOr: return Value::concrete(width, x | y, is_signed);
    case BinOp::kXor: return Value::concrete(width, x ^ y, is_signed);
    case BinOp::kShl:
    case BinOp::kShr: {
      // The shift amount is read at its own width and signedness.
      BigInt amount = b.as_integer();
      if (amount < 0) throw Stuck(StuckReason::kNegativeShift, what);
      if (amount >= width) {
        if (op == BinOp::kShr && is_signed && pa.as_integer() < 0) {
          return Value::concrete(width, low_mask(width), true);
        }
        return Value::concrete(width, 0, is_signed);
      }
      unsigned n = static_cast<unsigned>(amount);
      if (op == BinOp::kShl) return Value::from_int(width, x << n, is_signed);
      if (is_signed) return Value::from_int(width, pa.as_integer() >> n, true);
      return Value::concrete(width, x >> n, false);
    }
    case BinOp::kEq: return Value::boolean(x == y);
    case BinOp::kNe: return Value::boolean(x != y);
    case BinOp::kLt:
    case BinOp::kLe:
    case BinOp::kGt:
    case BinOp::kGe: {
      BigInt l = is_signed ? pa.as_integer() : x;
      BigInt r = is_signed ? pb.as_integer() : y;
      bool result = op == BinOp::kLt   ? l < r
                    : op == BinOp::kLe ? l <= r
                    : op == BinOp::kGt ? l > r
                                       : l >= r;
      return Value::boolean(result);
    }
    case BinOp::kLAnd: return Value::boolean(x != 0 && y != 0);
    case BinOp::kLOr: return Value::boolean(x != 0 || y != 0);
  }
  throw std::logic_error("unreachable");
}

Value apply_unop(UnOp op, const Value& a) {
  require_concrete(a, "operator " + std::string(unop_symbol(op)));
  switch (op) {
    case UnOp::kNeg: return Value::from_int(a.width(), -a.as_integer(), a.is_signed());
    case UnOp::kBitNot:
      return Value::concrete(a.width(), a.bits() ^ low_mask(a.width()), a.is_signed());
    case UnOp::kLNot: return Value::boolean(a.bits() == 0);
  }
  throw std::logic_error("unreachable");
}

Value truncate_to_width(const Value& v, int width) {
  if (v.is_undef()) {
    throw Stuck(StuckReason::kUndefInExpr, "assignment of @undef");
  }
  if (v.is_symbolic()) {
    if (width >= v.width()) {
      if (v.is_signed() && width > v.width() && v.slice_width() == v.width()) {
        throw Stuck(StuckReason::kSymbolicUnsupported, "sign extension of symbolic value");
      }
      return Value::symbolic(v.atom(), v.slice_lo(), v.slice_width(), width, v.is_signed());
    }
    int slice = std::min(width, v.slice_width());
    return Value::symbolic(v.atom(), v.slice_lo(), slice, width, v.is_signed());
  }
  return Value::concrete(width, extend_bits(v, width), v.is_signed());
}

Value fit_to_field(const Value& v, int width, bool field_signed) {
  return truncate_to_width(v, width).with_signedness(field_signed);
}

}  // namespace p4sem
