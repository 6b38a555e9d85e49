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


#include "p4sem/common/stuck.h"

#include <array>
#include <utility>

namespace p4sem {

namespace {

constexpr std::array<std::pair<StuckReason, std::string_view>, 14> kNames = {{
    {StuckReason::kUndefInExpr, "UNDEF_IN_EXPR"},
    {StuckReason::kNegativeShift, "NEGATIVE_SHIFT"},
    {StuckReason::kReadInvalidHeader, "READ_INVALID_HEADER"},
    {StuckReason::kWriteInvalidHeader, "WRITE_INVALID_HEADER"},
    {StuckReason::kUndefinedEgress, "UNDEFINED_EGRESS"},
    {StuckReason::kUnspecifiedPrimitiveCase, "UNSPECIFIED_PRIMITIVE_CASE"},
    {StuckReason::kUnknownPrimitive, "UNKNOWN_PRIMITIVE"},
    {StuckReason::kBadStackOp, "BAD_STACK_OP"},
    {StuckReason::kIndexOob, "INDEX_OOB"},
    {StuckReason::kParseLoopBudget, "PARSE_LOOP_BUDGET"},
    {StuckReason::kBadVarbitLen, "BAD_VARBIT_LEN"},
    {StuckReason::kNoBranch, "NO_BRANCH"},
    {StuckReason::kCallDepth, "CALL_DEPTH"},
    {StuckReason::kSymbolicUnsupported, "SYMBOLIC_UNSUPPORTED"},
}};

}  // namespace

std::string_view stuck_reason_name(StuckReason reason) {
  for (const auto& [r, name] : kNames) {
    if (r == reason) return name;
  }
  return "UNKNOWN";
}

bool parse_stuck_reason(std::string_view name, StuckReason* out) {
  for (const auto& [r, n] : kNames) {
    if (n == name) {
      *out = r;
      return true;
    }
  }
  return false;
}

Stuck::Stuck(StuckReason reason, std::string site)
    : reason_(reason), site_(std::move(site)) {
  what_ = std::string(stuck_reason_name(reason_)) + " at " + site_;
}

void Stuck::add_context(std::string_view outer) {
  site_ = std::string(outer) + " / " + site_;
  what_ = std::string(stuck_reason_name(reason_)) + " at " + site_;
}

}  // namespace p4sem
