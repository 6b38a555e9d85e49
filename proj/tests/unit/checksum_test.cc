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


#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "p4sem/checksum/checksum.h"
#include "p4sem/common/error.h"
#include "oracles/oracles.h"

namespace p4sem {
namespace {

std::vector<uint8_t> ascii(const std::string& s) { return {s.begin(), s.end()}; }

TEST(Csum16, Rfc1071Example) {
  std::vector<uint8_t> b{0x00, 0x01, 0xF2, 0x03, 0xF4, 0xF5, 0xF6, 0xF7};
  EXPECT_EQ(csum16(b), 0x220D);
  EXPECT_EQ(oracle::csum16(b), 0x220D);
}

TEST(Csum16, EmptyAndOddLength) {
  EXPECT_EQ(csum16({}), 0xFFFF);
  std::vector<uint8_t> one{0xFF};
  EXPECT_EQ(csum16(one), 0x00FF);
}

TEST(Crc, CheckValues) {
  std::vector<uint8_t> check = ascii("123456789");
  EXPECT_EQ(crc16(check), 0xBB3D);
  EXPECT_EQ(crc32(check), 0xCBF43926u);
  EXPECT_EQ(oracle::crc16(check), 0xBB3Du);
  EXPECT_EQ(oracle::crc32(check), 0xCBF43926u);
}

TEST(Checksums, AgreeWithReferenceOnRandomInput) {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    std::vector<uint8_t> b(rng() % 64);
    for (uint8_t& x : b) x = static_cast<uint8_t>(rng());
    ASSERT_EQ(csum16(b), oracle::csum16(b));
    ASSERT_EQ(crc16(b), oracle::crc16(b));
    ASSERT_EQ(crc32(b), oracle::crc32(b));
    uint16_t x = 0;
    for (size_t k = 0; k < b.size(); ++k) x ^= static_cast<uint16_t>(b[k] << (k % 2 ? 0 : 8));
    ASSERT_EQ(xor16(b), x);
  }
}

TEST(Csum16, InsertedChecksumVerifiesToZero) {
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    std::vector<uint8_t> b(2 * (1 + rng() % 20));
    for (uint8_t& x : b) x = static_cast<uint8_t>(rng());
    b[0] = b[1] = 0;
    uint16_t c = csum16(b);
    b[0] = static_cast<uint8_t>(c >> 8);
    b[1] = static_cast<uint8_t>(c);
    ASSERT_EQ(csum16(b), 0);
  }
}

TEST(Identity, ReturnsTheStream) {
  BitString bits;
  bits.append(0xAB, 8);
  EXPECT_EQ(identity_hash(bits, 8), 0xAB);
  EXPECT_THROW(identity_hash(bits, 16), Error);
}

TEST(ComputeHash, FitsOutputWidth) {
  BitString bits = BitString::from_bytes(ascii("123456789"));
  EXPECT_EQ(compute_hash(HashAlgorithm::kCrc32, bits, 16), 0x3926);
  EXPECT_EQ(compute_hash(HashAlgorithm::kCrc16, bits, 32), 0xBB3D);
  // A 12-bit stream is padded with zero bits to two bytes.
  BitString odd;
  odd.append(0xABC, 12);
  EXPECT_EQ(compute_hash(HashAlgorithm::kXor16, odd, 16), 0xABC0);
}

}  // namespace
}  // namespace p4sem
