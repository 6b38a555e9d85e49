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


#ifndef P4SEM_RUNTIME_PROFILE_H_
#define P4SEM_RUNTIME_PROFILE_H_

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "p4sem/values/value.h"

namespace p4sem {

struct Config;

// Target-supplied primitive: receives the evaluated arguments.
using PrimitiveHook = std::function<void(Config& cfg, std::span<const Value> args)>;

// Target-specific choices the semantics leaves open.
struct TargetProfile {
  std::string name = "default";
  bool zero_registers = false;        // registers start at 0 instead of undefined
  bool drop_undefined_egress = false; // undefined egress drops instead of sticking
  bool fifo_links = false;            // links append to the tail of `in`
  std::map<std::string, PrimitiveHook> primitives;
};

// Comma-separated list of: default, zero-registers, drop-undef-egress,
// fifo-links. Throws Error(kInvalidArgument) on unknown names.
TargetProfile parse_profile(std::string_view spec);

}  // namespace p4sem

#endif  // P4SEM_RUNTIME_PROFILE_H_
