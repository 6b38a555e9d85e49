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


#ifndef P4SEM_TESTS_ORACLES_ORACLES_H_
#define P4SEM_TESTS_ORACLES_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "p4sem/values/value.h"

// Independent reference implementations shared by the unit and acceptance
// tests. None of them calls into the library under test.
namespace p4sem::oracle {

// An operand as plain integers.
struct Operand {
  int width;
  bool is_signed;
  int64_t bits;

  int64_t numeric() const {
    if (is_signed && (bits >> (width - 1)) & 1) return bits - (int64_t{1} << width);
    return bits;
  }
};

inline int64_t mask_to(int64_t v, int w) { return v & ((int64_t{1} << w) - 1); }

inline int64_t signed_at(int64_t bits, int w) {
  return (bits >> (w - 1)) & 1 ? bits - (int64_t{1} << w) : bits;
}

// Reference semantics in 64-bit integers: extend each operand to the common
// width by its own signedness, compute exactly, mask. Returns false when the
// operation must stick.
inline bool binop(BinOp op, const Operand& a, const Operand& b, int64_t* out, int* out_width) {
  const int w = std::max(a.width, b.width);
  const bool sgn = a.is_signed || b.is_signed;
  const int64_t x = mask_to(a.numeric(), w);
  const int64_t y = mask_to(b.numeric(), w);
  *out_width = w;
  const int64_t cmp_l = sgn ? signed_at(x, w) : x;
  const int64_t cmp_r = sgn ? signed_at(y, w) : y;
  switch (op) {
    case BinOp::kAdd: *out = mask_to(x + y, w); return true;
    case BinOp::kSub: *out = mask_to(x - y, w); return true;
    case BinOp::kMul: *out = mask_to(x * y, w); return true;
    case BinOp::kAnd: *out = x & y; return true;
    case BinOp::kOr: *out = x | y; return true;
    case BinOp::kXor: *out = x ^ y; return true;
    case BinOp::kShl:
    case BinOp::kShr: {
      int64_t n = b.numeric();
      if (n < 0) return false;
      if (op == BinOp::kShl) {
        *out = n >= w ? 0 : mask_to(x << n, w);
      } else if (sgn) {
        int64_t s = signed_at(x, w);
        *out = mask_to(n >= w ? (s < 0 ? -1 : 0) : (s >> n), w);
      } else {
        *out = n >= w ? 0 : x >> n;
      }
      return true;
    }
    case BinOp::kEq: *out = x == y; *out_width = 1; return true;
    case BinOp::kNe: *out = x != y; *out_width = 1; return true;
    case BinOp::kLt: *out = cmp_l < cmp_r; *out_width = 1; return true;
    case BinOp::kLe: *out = cmp_l <= cmp_r; *out_width = 1; return true;
    case BinOp::kGt: *out = cmp_l > cmp_r; *out_width = 1; return true;
    case BinOp::kGe: *out = cmp_l >= cmp_r; *out_width = 1; return true;
    case BinOp::kLAnd: *out = x != 0 && y != 0; *out_width = 1; return true;
    case BinOp::kLOr: *out = x != 0 || y != 0; *out_width = 1; return true;
  }
  return false;
}

inline constexpr BinOp kAllBinOps[] = {
    BinOp::kAdd, BinOp::kSub, BinOp::kMul, BinOp::kAnd, BinOp::kOr, BinOp::kXor,
    BinOp::kShl, BinOp::kShr, BinOp::kEq,  BinOp::kNe,  BinOp::kLt, BinOp::kLe,
    BinOp::kGt,  BinOp::kGe,  BinOp::kLAnd, BinOp::kLOr};

// Reflected CRC, one bit at a time, from the algorithm parameters.
inline uint32_t crc(const std::vector<uint8_t>& data, int width, uint32_t poly, uint32_t init,
                    uint32_t xorout) {
  uint32_t rpoly = 0;
  for (int i = 0; i < width; ++i) {
    if (poly & (1u << i)) rpoly |= 1u << (width - 1 - i);
  }
  uint32_t c = init;
  for (uint8_t byte : data) {
    for (int bit = 0; bit < 8; ++bit) {
      bool in = ((byte >> bit) & 1) != ((c & 1) != 0);
      c >>= 1;
      if (in) c ^= rpoly;
    }
  }
  uint32_t mask = width == 32 ? 0xFFFFFFFFu : (1u << width) - 1;
  return (c ^ xorout) & mask;
}

inline uint32_t crc16(const std::vector<uint8_t>& data) { return crc(data, 16, 0x8005, 0, 0); }

inline uint32_t crc32(const std::vector<uint8_t>& data) {
  return crc(data, 32, 0x04C11DB7, 0xFFFFFFFF, 0xFFFFFFFF);
}

// Ones-complement checksum via an exact integer sum folded at the end.
inline uint16_t csum16(const std::vector<uint8_t>& data) {
  unsigned long long sum = 0;
  for (size_t i = 0; i < data.size(); i += 2) {
    unsigned hi = data[i];
    unsigned lo = i + 1 < data.size() ? data[i + 1] : 0;
    sum += hi * 256 + lo;
  }
  while (sum > 0xFFFF) sum = (sum % 65536) + (sum / 65536);
  return static_cast<uint16_t>(0xFFFF - sum);
}

}  // namespace p4sem::oracle

#endif  // P4SEM_TESTS_ORACLES_ORACLES_H_
