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


#ifndef P4SEM_COMMON_BIGINT_H_
#define P4SEM_COMMON_BIGINT_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace p4sem {

// Arbitrary-precision integer. Bit patterns are kept non-negative.
using BigInt = boost::multiprecision::cpp_int;

// 2^width - 1.
BigInt low_mask(int width);
// Number of bits needed for a non-negative value; 0 for 0.
int bit_length(const BigInt& v);
std::string to_hex(const BigInt& v);
// Accepts decimal, 0x hex and 0b binary; digits may contain `_`.
bool parse_integer(std::string_view text, BigInt* out);

}  // namespace p4sem

#endif  // P4SEM_COMMON_BIGINT_H_
