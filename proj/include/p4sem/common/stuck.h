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


#ifndef P4SEM_COMMON_STUCK_H_
#define P4SEM_COMMON_STUCK_H_

#include <exception>
#include <string>
#include <string_view>

namespace p4sem {

// Reasons a configuration has no applicable semantics. A stuck state is the
// signal for unspecified (unportable) behavior.
enum class StuckReason {
  kUndefInExpr,
  kNegativeShift,
  kReadInvalidHeader,
  kWriteInvalidHeader,
  kUndefinedEgress,
  kUnspecifiedPrimitiveCase,
  kUnknownPrimitive,
  kBadStackOp,
  kIndexOob,
  kParseLoopBudget,
  kBadVarbitLen,
  kNoBranch,
  kCallDepth,
  kSymbolicUnsupported,
};

std::string_view stuck_reason_name(StuckReason reason);
bool parse_stuck_reason(std::string_view name, StuckReason* out);

class Stuck : public std::exception {
 public:
  Stuck(StuckReason reason, std::string site);

  StuckReason reason() const { return reason_; }
  const std::string& site() const { return site_; }
  const char* what() const noexcept override { return what_.c_str(); }

  // Prefixes the site with an outer context, e.g. the calling action.
  void add_context(std::string_view outer);

 private:
  StuckReason reason_;
  std::string site_;
  std::string what_;
};

}  // namespace p4sem

#endif  // P4SEM_COMMON_STUCK_H_
