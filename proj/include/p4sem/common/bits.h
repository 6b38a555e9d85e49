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


#ifndef P4SEM_COMMON_BITS_H_
#define P4SEM_COMMON_BITS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "p4sem/common/bigint.h"

namespace p4sem {

// A bit sequence packed most-significant-bit first.
class BitString {
 public:
  BitString() = default;
  static BitString from_bytes(std::vector<uint8_t> bytes);

  size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  void append(const BigInt& value, int width);
  void append_bits(const BitString& other);
  void append_byte(uint8_t b) { append(b, 8); }

  bool bit(size_t i) const { return (data_[i / 8] >> (7 - i % 8)) & 1; }
  // Reads `width` bits at `offset`; requires offset + width <= size().
  BigInt read(size_t offset, int width) const;
  BitString slice(size_t offset, size_t width) const;

  // Packs to bytes; a final partial byte is padded with zero bits.
  const std::vector<uint8_t>& bytes() const { return data_; }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<uint8_t> data_;
  size_t nbits_ = 0;
};

// "0a1B" -> bytes. Returns false on odd length or a non-hex character.
bool parse_hex_bytes(std::string_view hex, std::vector<uint8_t>* out);
std::string bytes_to_hex(const std::vector<uint8_t>& bytes);

}  // namespace p4sem

#endif  // P4SEM_COMMON_BITS_H_
