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


#ifndef P4SEM_CHECKSUM_CHECKSUM_H_
#define P4SEM_CHECKSUM_CHECKSUM_H_

#include <cstdint>
#include <span>

#include "p4sem/common/bigint.h"
#include "p4sem/common/bits.h"
#include "p4sem/program/program.h"

namespace p4sem {

// Ones-complement of the ones-complement sum of 16-bit big-endian words; an
// odd trailing byte is padded with a zero byte.
uint16_t csum16(std::span<const uint8_t> bytes);
// CRC-16/ARC: poly 0x8005, reflected, init 0, xorout 0.
uint16_t crc16(std::span<const uint8_t> bytes);
// CRC-32 (IEEE 802.3): poly 0x04C11DB7, reflected, init and xorout 0xFFFFFFFF.
uint32_t crc32(std::span<const uint8_t> bytes);
// XOR of 16-bit big-endian words, zero-padded.
uint16_t xor16(std::span<const uint8_t> bytes);
// The bit stream itself; throws Error(kHashWidthMismatch) unless the stream
// is exactly `width` bits long.
BigInt identity_hash(const BitString& bits, int width);

// Runs `algorithm` over the stream (padded to whole bytes with zero bits) and
// fits the result to `output_width`: narrower keeps the low bits, wider
// zero-extends.
BigInt compute_hash(HashAlgorithm algorithm, const BitString& bits, int output_width);

std::string_view hash_algorithm_name(HashAlgorithm algorithm);

}  // namespace p4sem

#endif  // P4SEM_CHECKSUM_CHECKSUM_H_
