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


#include "p4sem/common/bigint.h"

#include <cctype>

namespace p4sem {

BigInt low_mask(int width) {
  if (width <= 0) return 0;
  BigInt one = 1;
  return (one << width) - 1;
}

int bit_length(const BigInt& v) {
  if (v <= 0) return 0;
  return static_cast<int>(boost::multiprecision::msb(v)) + 1;
}

std::string to_hex(const BigInt& v) {
  std::string digits;
  BigInt x = v;
  if (x == 0) return "0x0";
  while (x > 0) {
    int d = static_cast<int>(x & 0xF);
    digits.push_back("0123456789abcdef"[d]);
    x >>= 4;
  }
  return "0x" + std::string(digits.rbegin(), digits.rend());
}

bool parse_integer(std::string_view text, BigInt* out) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  } else if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    base = 2;
    text.remove_prefix(2);
  }
  if (text.empty()) return false;
  BigInt value = 0;
  bool any = false;
  for (char c : text) {
    if (c == '_') continue;
    int d;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      d = c - '0';
    } else if (base == 16 && std::isxdigit(static_cast<unsigned char>(c))) {
      d = std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
    } else {
      return false;
    }
    if (d >= base) return false;
    value = value * base + d;
    any = true;
  }
  if (!any) return false;
  *out = value;
  return true;
}

}  // namespace p4sem
