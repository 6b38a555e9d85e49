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


#ifndef P4SEM_PARSER_ENGINE_PARSER_ENGINE_H_
#define P4SEM_PARSER_ENGINE_PARSER_ENGINE_H_

#include <optional>
#include <string>

#include "p4sem/engine/exec.h"

namespace p4sem {

// Where parsing ended: a control to run, or a drop by an exception handler.
struct ParseOutcome {
  bool dropped = false;
  int control = -1;
  std::string exception;  // last exception raised, if any
};

// Runs the parser from `start` on ctx.packet, then verifies calculated
// fields. Exceptions go to the declared handler, then p4_pe_default, else
// the packet is dropped.
ParseOutcome run_parser(ExecContext& ctx);

// Extracts one header at ctx.offset. Throws ParserException on a short
// packet or a full stack.
void extract(ExecContext& ctx, const InstanceRef& target, const std::string& site);

// First matching case of a select; NO_BRANCH (or p4_pe_unhandled_select
// when declared) when none matches.
ParserTarget eval_select(ExecContext& ctx, const ParserStateInfo& state, const std::string& site);

// Checks every applicable verify binding; returns the exception to raise on
// a mismatch. The order among several bindings is a verify-order choice.
std::optional<std::string> verify_calculated_fields(ExecContext& ctx);

// Runs the handler for `name` and reports where control goes.
ParseOutcome handle_parser_exception(ExecContext& ctx, const std::string& name);

// Value stored in standard_metadata.parser_status for an exception.
int parser_status_code(const Program& program, const std::string& name);

}  // namespace p4sem

#endif  // P4SEM_PARSER_ENGINE_PARSER_ENGINE_H_
