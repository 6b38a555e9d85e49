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


#include "p4sem/runtime/profile.h"

#include <string>

#include "p4sem/common/error.h"

namespace p4sem {

TargetProfile parse_profile(std::string_view spec) {
  TargetProfile p;
  p.name = spec.empty() ? "default" : std::string(spec);
  size_t start = 0;
  while (start <= spec.size()) {
    size_t comma = spec.find(',', start);
    std::string_view item =
        spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (item == "zero-registers") {
      p.zero_registers = true;
    } else if (item == "drop-undef-egress") {
      p.drop_undefined_egress = true;
    } else if (item == "fifo-links") {
      p.fifo_links = true;
    } else if (!item.empty() && item != "default") {
      throw Error(ErrorCode::kInvalidArgument, "unknown profile '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

}  // namespace p4sem
