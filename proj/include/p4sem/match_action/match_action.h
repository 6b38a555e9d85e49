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


#ifndef P4SEM_MATCH_ACTION_MATCH_ACTION_H_
#define P4SEM_MATCH_ACTION_MATCH_ACTION_H_

#include <string>
#include <vector>

#include "p4sem/engine/exec.h"

namespace p4sem {

struct ApplyResult {
  bool hit = false;
  int action = -1;  // action that ran (entry or default); -1 if none
};

// Looks up the table and runs the first (highest-priority) matching entry's
// action, or the default action on a miss. Direct counters and meters of a
// hit entry update afterwards, in a stateful-update-order choice.
ApplyResult apply_table(ExecContext& ctx, int table, const std::string& site);

// Evaluated read keys of `table`; invalid headers stick unless the read is
// a validity read.
std::vector<Value> table_keys(ExecContext& ctx, int table, const std::string& site);
bool match_entry(ExecContext& ctx, int table, const TableEntry& entry,
                 const std::vector<Value>& keys, const std::string& site);

void exec_action(ExecContext& ctx, int action, std::vector<FrameArg> args,
                 const std::string& site);
void exec_call(ExecContext& ctx, const RCall& call);
void exec_primitive(ExecContext& ctx, const RCall& call);

// Runs a control block; `control` is a control id.
void exec_control(ExecContext& ctx, int control);

}  // namespace p4sem

#endif  // P4SEM_MATCH_ACTION_MATCH_ACTION_H_
