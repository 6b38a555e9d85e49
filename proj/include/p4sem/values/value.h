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


#ifndef P4SEM_VALUES_VALUE_H_
#define P4SEM_VALUES_VALUE_H_

#include <cstdint>
#include <string>

#include "p4sem/common/bigint.h"
#include "p4sem/values/const_expr.h"

namespace p4sem {

using AtomId = int;

// A fixed-width bit vector, the undefined value, or a (zero-extended) slice
// of a symbolic atom.
//
// Concrete: `bits` holds the two's-complement pattern, 0 <= bits < 2^width.
// Symbolic: the value is atom[slice_lo, slice_lo + slice_width), zero-extended
//           to `width`.
// Undef carries no width.
class Value {
 public:
  enum class Kind { kConcrete, kUndef, kSymbolic };

  Value() : kind_(Kind::kUndef) {}

  static Value concrete(int width, BigInt bits, bool is_signed = false);
  // Encodes an arbitrary integer as two's complement in `width` bits (wraps).
  static Value from_int(int width, const BigInt& v, bool is_signed = false);
  static Value undef() { return Value(); }
  static Value symbolic(AtomId atom, int slice_lo, int slice_width, int width,
                        bool is_signed = false);
  static Value boolean(bool b) { return concrete(1, b ? 1 : 0); }
  // Contents of a variable-length field extracted with zero bits. The only
  // concrete value of width 0.
  static Value empty_varbit();

  Kind kind() const { return kind_; }
  bool is_concrete() const { return kind_ == Kind::kConcrete; }
  bool is_undef() const { return kind_ == Kind::kUndef; }
  bool is_symbolic() const { return kind_ == Kind::kSymbolic; }

  int width() const { return width_; }
  bool is_signed() const { return signed_; }
  const BigInt& bits() const { return bits_; }
  // Numeric reading: two's complement when signed.
  BigInt as_integer() const;
  bool is_true() const { return bits_ != 0; }
  uint64_t as_u64() const { return static_cast<uint64_t>(bits_ & low_mask(64)); }

  AtomId atom() const { return atom_; }
  int slice_lo() const { return slice_lo_; }
  int slice_width() const { return slice_width_; }

  Value with_signedness(bool is_signed) const;

  std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  Kind kind_;
  int width_ = 0;
  bool signed_ = false;
  BigInt bits_ = 0;
  AtomId atom_ = -1;
  int slice_lo_ = 0;
  int slice_width_ = 0;
};

enum class BinOp {
  kAdd, kSub, kMul,
  kAnd, kOr, kXor,
  kShl, kShr,
  kEq, kNe, kLt, kLe, kGt, kGe,
  kLAnd, kLOr,
};

enum class UnOp { kNeg, kBitNot, kLNot };

std::string_view binop_symbol(BinOp op);
std::string_view unop_symbol(UnOp op);
bool is_comparison(BinOp op);

// Width inference for constants: positive n takes bit_length(n) bits (1 for
// zero); a negative literal -n takes one more, encoded in two's complement.
// Explicit widths pass through and must hold the value (kWidthOverflow).
Value infer_const_width(const ConstExpr& c);

// Concrete operands only; Undef sticks with kUndefInExpr. Operands are
// promoted to the larger width (sign-extended when signed), the result has
// that width and wraps. Comparisons give 1-bit booleans. The result is signed
// when either operand is.
Value apply_binop(BinOp op, const Value& a, const Value& b);
Value apply_unop(UnOp op, const Value& a);

// Keeps the low `width` bits. Narrower values are extended (sign-extended when
// signed). Symbolic values become a narrower slice of the same atom.
Value truncate_to_width(const Value& v, int width);

// Assignment into a field: fit to `width`, take the field's signedness.
Value fit_to_field(const Value& v, int width, bool field_signed);

}  // namespace p4sem

#endif  // P4SEM_VALUES_VALUE_H_
