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


#include "p4sem/program/primitives.h"

namespace p4sem {

namespace {

using R = ArgRole;
using P = PrimitiveOp;

const std::vector<PrimitiveSpec>& catalog() {
  static const std::vector<PrimitiveSpec> specs = {
      {"modify_field", P::kModifyField, {R::kField, R::kValue, R::kValue}, 2},
      {"add_to_field", P::kAddToField, {R::kField, R::kValue}, 2},
      {"subtract_from_field", P::kSubtractFromField, {R::kField, R::kValue}, 2},
      {"add", P::kAdd, {R::kField, R::kValue, R::kValue}, 3},
      {"subtract", P::kSubtract, {R::kField, R::kValue, R::kValue}, 3},
      {"bit_and", P::kBitAnd, {R::kField, R::kValue, R::kValue}, 3},
      {"bit_or", P::kBitOr, {R::kField, R::kValue, R::kValue}, 3},
      {"bit_xor", P::kBitXor, {R::kField, R::kValue, R::kValue}, 3},
      {"shift_left", P::kShiftLeft, {R::kField, R::kValue, R::kValue}, 3},
      {"shift_right", P::kShiftRight, {R::kField, R::kValue, R::kValue}, 3},
      {"add_header", P::kAddHeader, {R::kInstance}, 1},
      {"remove_header", P::kRemoveHeader, {R::kInstance}, 1},
      {"copy_header", P::kCopyHeader, {R::kInstance, R::kInstance}, 2},
      {"push", P::kPush, {R::kStack, R::kValue}, 1},
      {"pop", P::kPop, {R::kStack, R::kValue}, 1},
      {"register_read", P::kRegisterRead, {R::kField, R::kRegister, R::kValue}, 3},
      {"register_write", P::kRegisterWrite, {R::kRegister, R::kValue, R::kValue}, 3},
      {"count", P::kCount, {R::kCounter, R::kValue}, 2},
      {"execute_meter", P::kExecuteMeter, {R::kMeter, R::kValue, R::kField}, 3},
      {"drop", P::kDrop, {}, 0},
      {"no_op", P::kNoOp, {}, 0},
      {"truncate", P::kTruncate, {R::kValue}, 1},
      {"modify_field_with_hash_based_offset", P::kModifyFieldWithHashBasedOffset,
       {R::kField, R::kValue, R::kCalculation, R::kValue}, 4},
      {"resubmit", P::kResubmit, {R::kFieldList}, 0},
      {"recirculate", P::kRecirculate, {R::kFieldList}, 0},
      {"clone_ingress_pkt_to_ingress", P::kCloneI2I, {R::kValue, R::kFieldList}, 1},
      {"clone_egress_pkt_to_ingress", P::kCloneE2I, {R::kValue, R::kFieldList}, 1},
      {"clone_ingress_pkt_to_egress", P::kCloneI2E, {R::kValue, R::kFieldList}, 1},
      {"clone_egress_pkt_to_egress", P::kCloneE2E, {R::kValue, R::kFieldList}, 1},
      {"generate_digest", P::kGenerateDigest, {R::kValue, R::kFieldList}, 2},
  };
  return specs;
}

}  // namespace

std::string_view arg_role_name(ArgRole role) {
  switch (role) {
    case ArgRole::kValue: return "value";
    case ArgRole::kField: return "field";
    case ArgRole::kInstance: return "instance";
    case ArgRole::kStack: return "stack";
    case ArgRole::kFieldList: return "field_list";
    case ArgRole::kCalculation: return "field_list_calculation";
    case ArgRole::kRegister: return "register";
    case ArgRole::kCounter: return "counter";
    case ArgRole::kMeter: return "meter";
  }
  return "?";
}

std::span<const PrimitiveSpec> primitive_catalog() { return catalog(); }

const PrimitiveSpec* find_primitive(std::string_view name) {
  for (const PrimitiveSpec& s : catalog()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace p4sem
