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


#ifndef P4SEM_RUNTIME_CONTROL_SCRIPT_H_
#define P4SEM_RUNTIME_CONTROL_SCRIPT_H_

#include <string>
#include <string_view>

#include "p4sem/runtime/config.h"

namespace p4sem {

// Line-oriented table population:
//   add <table> <prio> <read>:<spec> ... => <action>(<arg>, ...)
//   default <table> => <action>(<arg>, ...)
//   register <name>[<idx>] = <value>
//   mirror <session> <port>
// Specs: v (exact), v&&&m (ternary), v/len (lpm), [lo,hi] (range), 0|1 or
// valid:0|1 (valid). Numbers are decimal, 0x hex, dotted IPv4 or
// colon-separated MAC. `#` starts a comment.
// Throws Error(kControlScriptError) naming the line.
void apply_control_script(Config& cfg, std::string_view script);

// Applies a single line; returns false when the line is not a control-script
// command (so callers can layer their own commands on top).
bool apply_control_line(Config& cfg, std::string_view line, int line_no);

// Parses one numeric literal in control-script syntax.
bool parse_script_number(std::string_view text, BigInt* out);

std::string read_text_file(const std::string& path);

}  // namespace p4sem

#endif  // P4SEM_RUNTIME_CONTROL_SCRIPT_H_
