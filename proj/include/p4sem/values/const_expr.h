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


#ifndef P4SEM_VALUES_CONST_EXPR_H_
#define P4SEM_VALUES_CONST_EXPR_H_

#include <optional>

#include "p4sem/common/bigint.h"

namespace p4sem {

// How a constant came to carry a minus sign. `-5` written as one literal and
// `-(5)` are distinct even though they denote the same number: they infer
// different widths.
enum class ConstSign {
  kPlain,
  kNegativeLiteral,
  kNegatedExpression,
};

struct ConstExpr {
  BigInt magnitude;  // always >= 0
  std::optional<int> width;
  ConstSign sign = ConstSign::kPlain;

  friend bool operator==(const ConstExpr&, const ConstExpr&) = default;
};

}  // namespace p4sem

#endif  // P4SEM_VALUES_CONST_EXPR_H_
