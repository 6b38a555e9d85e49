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


#include "p4sem/common/bits.h"

#include <cctype>

namespace p4sem {

BitString BitString::from_bytes(std::vector<uint8_t> bytes) {
  BitString b;
  b.nbits_ = bytes.size() * 8;
  b.data_ = std::move(bytes);
  return b;
}

void BitString::append(const BigInt& value, int width) {
  if (nbits_ % 8 == 0 && width % 8 == 0) {
    for (int i = width - 8; i >= 0; i -= 8) {
      data_.push_back(static_cast<uint8_t>(static_cast<unsigned>((value >> i) & 0xff)));
    }
    nbits_ += width;
    return;
  }
  for (int i = width - 1; i >= 0; --i) {
    if (nbits_ % 8 == 0) data_.push_back(0);
    if (bit_test(value, i)) data_.back() |= static_cast<uint8_t>(1u << (7 - nbits_ % 8));
    ++nbits_;
  }
}

void BitString::append_bits(const BitString& other) {
  if (nbits_ % 8 == 0) {
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    nbits_ += other.nbits_;
    return;
  }
  for (size_t i = 0; i < other.nbits_; ++i) append(other.bit(i) ? 1 : 0, 1);
}

BigInt BitString::read(size_t offset, int width) const {
  BigInt v = 0;
  if (offset % 8 == 0 && width % 8 == 0) {
    for (int i = 0; i < width / 8; ++i) {
      v <<= 8;
      v |= data_[offset / 8 + i];
    }
    return v;
  }
  for (int i = 0; i < width; ++i) {
    v <<= 1;
    if (bit(offset + i)) v |= 1;
  }
  return v;
}

BitString BitString::slice(size_t offset, size_t width) const {
  BitString out;
  if (offset % 8 == 0) {
    size_t nbytes = (width + 7) / 8;
    out.data_.assign(data_.begin() + offset / 8, data_.begin() + offset / 8 + nbytes);
    out.nbits_ = width;
    if (width % 8) out.data_.back() &= static_cast<uint8_t>(0xff << (8 - width % 8));
    return out;
  }
  for (size_t i = 0; i < width; ++i) out.append(bit(offset + i) ? 1 : 0, 1);
  return out;
}

bool parse_hex_bytes(std::string_view hex, std::vector<uint8_t>* out) {
  out->clear();
  if (hex.size() % 2 != 0) return false;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  for (size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]);
    int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) return false;
    out->push_back(static_cast<uint8_t>(hi * 16 + lo));
  }
  return true;
}

std::string bytes_to_hex(const std::vector<uint8_t>& bytes) {
  static const char* kDigits = "0123456789abcdef";
  std::string s;
  for (uint8_t b : bytes) {
    s += kDigits[b >> 4];
    s += kDigits[b & 15];
  }
  return s;
}

}  // namespace p4sem
