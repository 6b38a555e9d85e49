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


#include "p4sem/checksum/checksum.h"

#include <boost/crc.hpp>

#include "p4sem/common/error.h"

namespace p4sem {

uint16_t csum16(std::span<const uint8_t> bytes) {
  uint32_t sum = 0;
  for (size_t i = 0; i < bytes.size(); i += 2) {
    uint32_t word = static_cast<uint32_t>(bytes[i]) << 8;
    if (i + 1 < bytes.size()) word |= bytes[i + 1];
    sum += word;
    sum = (sum & 0xffff) + (sum >> 16);
  }
  return static_cast<uint16_t>(~sum & 0xffff);
}

uint16_t crc16(std::span<const uint8_t> bytes) {
  boost::crc_16_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return static_cast<uint16_t>(crc.checksum());
}

uint32_t crc32(std::span<const uint8_t> bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return static_cast<uint32_t>(crc.checksum());
}

uint16_t xor16(std::span<const uint8_t> bytes) {
  uint16_t acc = 0;
  for (size_t i = 0; i < bytes.size(); i += 2) {
    uint16_t word = static_cast<uint16_t>(bytes[i] << 8);
    if (i + 1 < bytes.size()) word = static_cast<uint16_t>(word | bytes[i + 1]);
    acc ^= word;
  }
  return acc;
}

BigInt identity_hash(const BitString& bits, int width) {
  if (bits.size() != static_cast<size_t>(width)) {
    throw Error(ErrorCode::kHashWidthMismatch,
                "identity hash over " + std::to_string(bits.size()) + " bits, expected " +
                    std::to_string(width));
  }
  return width == 0 ? BigInt(0) : bits.read(0, width);
}

BigInt compute_hash(HashAlgorithm algorithm, const BitString& bits, int output_width) {
  BigInt raw;
  std::span<const uint8_t> bytes(bits.bytes());
  switch (algorithm) {
    case HashAlgorithm::kCsum16: raw = csum16(bytes); break;
    case HashAlgorithm::kCrc16: raw = crc16(bytes); break;
    case HashAlgorithm::kCrc32: raw = crc32(bytes); break;
    case HashAlgorithm::kXor16: raw = xor16(bytes); break;
    case HashAlgorithm::kIdentity: raw = identity_hash(bits, output_width); break;
  }
  return raw & low_mask(output_width);
}

std::string_view hash_algorithm_name(HashAlgorithm algorithm) {
  switch (algorithm) {
    case HashAlgorithm::kCsum16: return "csum16";
    case HashAlgorithm::kCrc16: return "crc16";
    case HashAlgorithm::kCrc32: return "crc32";
    case HashAlgorithm::kXor16: return "xor16";
    case HashAlgorithm::kIdentity: return "identity";
  }
  return "?";
}

}  // namespace p4sem
