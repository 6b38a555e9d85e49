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


#include <cstdint>
#include <random>

#include "gtest/gtest.h"
#include "p4sem/common/error.h"
#include "p4sem/common/stuck.h"
#include "p4sem/values/const_expr.h"
#include "p4sem/values/constraint.h"
#include "p4sem/values/value.h"
#include "oracles/oracles.h"

namespace p4sem {
namespace {

ConstExpr literal(int64_t v, ConstSign sign = ConstSign::kPlain) {
  ConstExpr c;
  c.magnitude = v < 0 ? -v : v;
  c.sign = sign;
  return c;
}

TEST(InferConstWidth, SmallestWidthForPositive) {
  Value v = infer_const_width(literal(5));
  EXPECT_EQ(v.width(), 3);
  EXPECT_EQ(v.bits(), 5);
}

TEST(InferConstWidth, NegativeLiteralTakesOneMoreBit) {
  Value v = infer_const_width(literal(-5, ConstSign::kNegativeLiteral));
  EXPECT_EQ(v.width(), 4);
  EXPECT_EQ(v.bits(), 0b1011);
}

TEST(InferConstWidth, ZeroIsOneBit) {
  Value v = infer_const_width(literal(0));
  EXPECT_EQ(v.width(), 1);
  EXPECT_EQ(v.bits(), 0);
}

TEST(InferConstWidth, ExplicitWidthPassesThrough) {
  ConstExpr c = literal(255);
  c.width = 16;
  EXPECT_EQ(infer_const_width(c).width(), 16);
  c.width = 4;
  EXPECT_THROW(infer_const_width(c), Error);
}

TEST(InferConstWidth, NegativeIsPositivePlusOneUpTo2To20) {
  for (int64_t n = 1; n <= (int64_t{1} << 20); ++n) {
    int pos = infer_const_width(literal(n)).width();
    int neg = infer_const_width(literal(-n, ConstSign::kNegativeLiteral)).width();
    ASSERT_EQ(neg, pos + 1) << n;
  }
}

TEST(ApplyBinop, UnsignedAddWraps) {
  Value r = apply_binop(BinOp::kAdd, Value::concrete(8, 0xFF), Value::concrete(8, 0x01));
  EXPECT_EQ(r.width(), 8);
  EXPECT_EQ(r.bits(), 0);
}

TEST(ApplyBinop, MixedWidthPromotion) {
  // 3-bit 5 plus 4-bit signed -5: 0101 + 1011 = 0000.
  Value r = apply_binop(BinOp::kAdd, Value::concrete(3, 5), Value::from_int(4, -5, true));
  EXPECT_EQ(r.width(), 4);
  EXPECT_EQ(r.bits(), 0);
  EXPECT_TRUE(r.is_signed());
}

TEST(ApplyBinop, UndefSticks) {
  try {
    apply_binop(BinOp::kAnd, Value::undef(), Value::concrete(8, 1));
    FAIL() << "expected stuck";
  } catch (const Stuck& s) {
    EXPECT_EQ(s.reason(), StuckReason::kUndefInExpr);
  }
}

TEST(ApplyBinop, NegativeShiftSticks) {
  try {
    apply_binop(BinOp::kShl, Value::concrete(8, 1), Value::from_int(4, -1, true));
    FAIL() << "expected stuck";
  } catch (const Stuck& s) {
    EXPECT_EQ(s.reason(), StuckReason::kNegativeShift);
  }
}

TEST(ApplyBinop, SignedRightShiftIsArithmetic) {
  Value r = apply_binop(BinOp::kShr, Value::from_int(8, -8, true), Value::concrete(2, 2));
  EXPECT_EQ(r.as_integer(), -2);
}

using oracle::Operand;

TEST(ApplyBinop, MatchesOracleExhaustivelyUpToWidth4) {
  long checked = 0;
  long stuck = 0;
  for (BinOp op : oracle::kAllBinOps) {
    for (int wa = 1; wa <= 4; ++wa) {
      for (int wb = 1; wb <= 4; ++wb) {
        for (int sa = 0; sa < 2; ++sa) {
          for (int sb = 0; sb < 2; ++sb) {
            for (int64_t xa = 0; xa < (1 << wa); ++xa) {
              for (int64_t xb = 0; xb < (1 << wb); ++xb) {
                Operand a{wa, sa == 1, xa};
                Operand b{wb, sb == 1, xb};
                int64_t want = 0;
                int want_w = 0;
                bool ok = oracle::binop(op, a, b, &want, &want_w);
                Value va = Value::concrete(wa, xa, a.is_signed);
                Value vb = Value::concrete(wb, xb, b.is_signed);
                if (!ok) {
                  EXPECT_THROW(apply_binop(op, va, vb), Stuck);
                  ++stuck;
                  continue;
                }
                Value got = apply_binop(op, va, vb);
                ASSERT_EQ(got.width(), want_w) << binop_symbol(op);
                ASSERT_EQ(got.bits(), want)
                    << binop_symbol(op) << " " << va.to_string() << " " << vb.to_string();
                ++checked;
              }
            }
          }
        }
      }
    }
  }
  // 16 ops x 4 signedness pairs x (2 + 4 + 8 + 16)^2 operand pairs.
  EXPECT_EQ(checked + stuck, 16 * 4 * 900);
  EXPECT_GT(stuck, 0);
}

TEST(TruncateToWidth, KeepsLowBits) {
  EXPECT_EQ(truncate_to_width(Value::concrete(9, 0x1FF), 8).bits(), 0xFF);
  EXPECT_EQ(truncate_to_width(Value::concrete(8, 0x42), 8).bits(), 0x42);
  EXPECT_THROW(truncate_to_width(Value::undef(), 8), Stuck);
}

TEST(TruncateToWidth, MagnitudeBelowTwoToW) {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    int from = 1 + static_cast<int>(rng() % 64);
    int to = 1 + static_cast<int>(rng() % 64);
    BigInt bits = BigInt(rng()) * BigInt(rng()) & low_mask(from);
    Value t = truncate_to_width(Value::concrete(from, bits, rng() % 2 == 0), to);
    ASSERT_LT(t.bits(), BigInt(1) << to);
    ASSERT_EQ(t.width(), to);
  }
}

TEST(ConstraintSat, EtherTypeNotIpv4) {
  std::vector<Constraint> cs{Constraint::neq(0, 16, 0x0800)};
  SatResult r = constraint_sat(cs, {{0, 16}});
  ASSERT_EQ(r.status, SatStatus::kSat);
  EXPECT_NE(r.witness.at(0), 0x0800);
}

TEST(ConstraintSat, Contradiction) {
  std::vector<Constraint> cs{Constraint::eq(0, 8, 3), Constraint::neq(0, 8, 3)};
  EXPECT_EQ(constraint_sat(cs, {{0, 8}}).status, SatStatus::kUnsat);
}

TEST(ConstraintSat, TernaryAgainstRange) {
  std::vector<Constraint> cs{Constraint::ternary(0, 6, 0b100000, 0b110000),
                             Constraint::range(0, 6, 0, 15)};
  EXPECT_EQ(constraint_sat(cs, {{0, 6}}).status, SatStatus::kUnsat);
}

Constraint random_constraint(std::mt19937& rng, AtomId atom, int width) {
  const int lo = static_cast<int>(rng() % width);
  const int w = 1 + static_cast<int>(rng() % (width - lo));
  const BigInt top = low_mask(w);
  BigInt v = BigInt(rng()) & top;
  BigInt u = BigInt(rng()) & top;
  switch (rng() % 4) {
    case 0: return Constraint::eq(atom, w, v, lo);
    case 1: return Constraint::neq(atom, w, v, lo);
    case 2: return Constraint::ternary(atom, w, v & u, u, lo);
    default: return Constraint::range(atom, w, std::min(v, u), std::max(v, u), lo);
  }
}

TEST(ConstraintSat, AgreesWithBruteForce) {
  std::mt19937 rng(11);
  for (int round = 0; round < 400; ++round) {
    const int w0 = 1 + static_cast<int>(rng() % 10);
    const int w1 = 1 + static_cast<int>(rng() % 10);
    std::vector<Constraint> cs;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      bool first = rng() % 2 == 0;
      cs.push_back(random_constraint(rng, first ? 0 : 1, first ? w0 : w1));
      if (rng() % 3 == 0) cs.push_back(cs.back().negated());
    }
    bool any0 = false, any1 = false;
    for (int64_t x = 0; x < (1 << w0); ++x) {
      bool ok = true;
      for (const Constraint& c : cs) ok = ok && (c.atom != 0 || c.holds(x));
      any0 = any0 || ok;
    }
    for (int64_t x = 0; x < (1 << w1); ++x) {
      bool ok = true;
      for (const Constraint& c : cs) ok = ok && (c.atom != 1 || c.holds(x));
      any1 = any1 || ok;
    }
    SatResult r = constraint_sat(cs, {{0, w0}, {1, w1}});
    if (any0 && any1) {
      ASSERT_EQ(r.status, SatStatus::kSat) << round;
      for (const Constraint& c : cs) ASSERT_TRUE(c.holds(r.witness.at(c.atom))) << round;
    } else {
      ASSERT_EQ(r.status, SatStatus::kUnsat) << round;
    }
  }
}

TEST(ConstraintSat, NegationIsComplement) {
  std::mt19937 rng(5);
  for (int round = 0; round < 200; ++round) {
    Constraint c = random_constraint(rng, 0, 8);
    Constraint n = c.negated();
    for (int x = 0; x < 256; ++x) ASSERT_NE(c.holds(x), n.holds(x));
  }
}

}  // namespace
}  // namespace p4sem
