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


#ifndef P4SEM_PROGRAM_PRIMITIVES_H_
#define P4SEM_PROGRAM_PRIMITIVES_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace p4sem {

// What a primitive expects in each argument position.
enum class ArgRole {
  kValue,        // any expression, evaluated
  kField,        // destination field
  kInstance,     // header instance or stack element
  kStack,        // header stack
  kFieldList,
  kCalculation,  // field_list_calculation
  kRegister,
  kCounter,
  kMeter,
};

std::string_view arg_role_name(ArgRole role);

enum class PrimitiveOp {
  kModifyField,
  kAddToField,
  kSubtractFromField,
  kAdd,
  kSubtract,
  kBitAnd,
  kBitOr,
  kBitXor,
  kShiftLeft,
  kShiftRight,
  kAddHeader,
  kRemoveHeader,
  kCopyHeader,
  kPush,
  kPop,
  kRegisterRead,
  kRegisterWrite,
  kCount,
  kExecuteMeter,
  kDrop,
  kNoOp,
  kTruncate,
  kModifyFieldWithHashBasedOffset,
  kResubmit,
  kRecirculate,
  kCloneI2I,
  kCloneE2I,
  kCloneI2E,
  kCloneE2E,
  kGenerateDigest,
};

struct PrimitiveSpec {
  std::string name;
  PrimitiveOp op;
  std::vector<ArgRole> roles;
  int min_args = 0;  // trailing arguments beyond this are optional
};

std::span<const PrimitiveSpec> primitive_catalog();
// Null when `name` is not a primitive.
const PrimitiveSpec* find_primitive(std::string_view name);

}  // namespace p4sem

#endif  // P4SEM_PROGRAM_PRIMITIVES_H_
