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


#ifndef P4SEM_COMMON_SPAN_H_
#define P4SEM_COMMON_SPAN_H_

#include <string>

namespace p4sem {

// Source position of a token or syntax node (1-based).
struct SourceSpan {
  int line = 0;
  int column = 0;

  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(column);
  }
};

// Syntax nodes carry a span, but two trees are equal "modulo spans".
// Wrapping the span keeps defaulted operator== usable on every node.
struct NodeSpan {
  SourceSpan at;
  friend bool operator==(const NodeSpan&, const NodeSpan&) { return true; }
};

}  // namespace p4sem

#endif  // P4SEM_COMMON_SPAN_H_
