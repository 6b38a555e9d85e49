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


#ifndef P4SEM_PIPELINE_PIPELINE_H_
#define P4SEM_PIPELINE_PIPELINE_H_

#include <cstdint>

#include "p4sem/engine/exec.h"

namespace p4sem {

// Takes the head of cfg.in through parse, ingress, egress, checksum update
// and deparse. Output goes to cfg.out; resubmitted, recirculated and cloned
// packets go back to cfg.in. A stuck packet sets cfg.status to kStuck and
// records the reason. Returns false (doing nothing) when `in` is empty or
// the node is stuck.
bool process_packet(Config& cfg, const TargetProfile& profile, Chooser& chooser,
                    PathCondition& pc, Coverage* coverage = nullptr,
                    const EngineOptions& options = {});

// Recomputes every applicable update binding. Several bindings are taken in
// an update-order choice.
void update_calculated_fields(ExecContext& ctx);

// Serializes the valid instances in a deparse order (a choice point when the
// inferred precedence admits more than one) followed by the unparsed payload.
Packet deparse(ExecContext& ctx);

// Keeps the first `bytes` bytes of `p`.
void truncate_packet(Packet& p, int64_t bytes, const std::string& site);

// Processes packets in run mode until `in` is empty, the node is stuck or
// `max_packets` passes have run. Returns the number of passes.
int64_t run_node(Config& cfg, const TargetProfile& profile, int64_t max_packets,
                 Coverage* coverage = nullptr, const EngineOptions& options = {});

// Standard metadata field index by name, or -1.
int standard_field(const Program& program, const std::string& name);

}  // namespace p4sem

#endif  // P4SEM_PIPELINE_PIPELINE_H_
