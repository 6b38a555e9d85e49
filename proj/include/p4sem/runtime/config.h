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


#ifndef P4SEM_RUNTIME_CONFIG_H_
#define P4SEM_RUNTIME_CONFIG_H_

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p4sem/common/stuck.h"
#include "p4sem/program/program.h"
#include "p4sem/runtime/packet.h"
#include "p4sem/runtime/profile.h"
#include "p4sem/values/value.h"

namespace p4sem {

// One read of a table entry. exact: value; ternary: value/mask; lpm: value
// with prefix_len (mask derived); range: value..hi; valid: value 0 or 1.
struct MatchSpec {
  MatchKind kind = MatchKind::kExact;
  BigInt value = 0;
  BigInt mask = 0;
  BigInt hi = 0;
  int prefix_len = 0;
  friend bool operator==(const MatchSpec&, const MatchSpec&) = default;
};

struct TableEntry {
  int64_t priority = 0;  // unique per table; larger wins
  std::vector<MatchSpec> matches;  // one per table read
  int action = -1;
  std::vector<Value> args;
  int64_t id = -1;  // assigned at install, never reused
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct ActionCallSpec {
  int action = -1;
  std::vector<Value> args;
  friend bool operator==(const ActionCallSpec&, const ActionCallSpec&) = default;
};

struct TableState {
  std::vector<TableEntry> entries;  // strictly descending priority
  std::optional<ActionCallSpec> default_action;
  friend bool operator==(const TableState&, const TableState&) = default;
};

enum class NodeStatus { kRunning, kAwaitingInput, kStuck };

std::string_view node_status_name(NodeStatus s);

struct StuckInfo {
  StuckReason reason = StuckReason::kUndefInExpr;
  std::string site;
  uint64_t packet_id = 0;
  friend bool operator==(const StuckInfo&, const StuckInfo&) = default;
};

struct DigestRecord {
  BigInt receiver;
  std::vector<Value> values;
  friend bool operator==(const DigestRecord&, const DigestRecord&) = default;
};

// Complete runtime state of one node between packets.
struct Config {
  const Program* program = nullptr;
  bool zero_registers = false;

  std::vector<InstanceState> instances;
  // Stateful cells by index; an absent index holds the initial value.
  std::vector<std::map<int64_t, Value>> statefuls;
  std::vector<TableState> tables;
  std::deque<Packet> in;
  std::vector<Packet> out;
  std::vector<DigestRecord> digests;
  std::map<int64_t, int> mirror_sessions;  // clone session -> port

  NodeStatus status = NodeStatus::kAwaitingInput;
  std::optional<StuckInfo> stuck;
  int64_t next_entry_id = 0;
  uint64_t packets_processed = 0;
  uint64_t packets_dropped = 0;
  // Deparse order of the last emitted packet, as unit indices.
  std::vector<int> last_deparse_order;
};

Config new_config(const Program& program, const TargetProfile& profile);

// Per-packet reset: headers invalid with undefined fields, metadata valid
// with initial values.
void reset_instances(Config& cfg);
InstanceState initial_instance_state(const Program& program, InstanceId id);

// Field access. Reads and writes of an invalid header stick with
// kReadInvalidHeader / kWriteInvalidHeader. Writes fit the value to the
// declared width.
const Value& get_field(const Config& cfg, InstanceId inst, int field, const std::string& site);
void set_field(Config& cfg, InstanceId inst, int field, const Value& v, const std::string& site);

void add_header(Config& cfg, InstanceId inst);
void remove_header(Config& cfg, InstanceId inst);
void copy_header(Config& cfg, InstanceId dst, InstanceId src, const std::string& site);
// Header stacks: lowest invalid element (-1 when full); highest valid
// element (-1 when empty).
InstanceId stack_next(const Config& cfg, int stack);
InstanceId stack_last(const Config& cfg, int stack);
int stack_valid_count(const Config& cfg, int stack);
void stack_push(Config& cfg, int stack, int64_t count, const std::string& site);
void stack_pop(Config& cfg, int stack, int64_t count, const std::string& site);

// Statefuls. Indices are checked against instance_count, or against the live
// entry ids of the bound table for direct statefuls (kIndexOob).
Value stateful_initial(const Config& cfg, int stateful);
Value register_read(const Config& cfg, int reg, int64_t index, const std::string& site);
void register_write(Config& cfg, int reg, int64_t index, const Value& v, const std::string& site);
// Counters add 1 (packets) or `bytes`; packets_and_bytes counters keep the
// packet count in the high 64 bits and the byte count in the low 64 bits.
void count_increment(Config& cfg, int counter, int64_t index, uint64_t bytes,
                     const std::string& site);
// Meters have no rate model; an execution is recorded by counting it.
void meter_execute(Config& cfg, int meter, int64_t index, const std::string& site);
Value stateful_read(const Config& cfg, int stateful, int64_t index);

// Table population (between packets only). Throws Error(kControlScriptError)
// on width mismatches, duplicate priorities or actions outside the table.
int64_t install_entry(Config& cfg, int table, TableEntry entry);
bool remove_entry(Config& cfg, int table, int64_t entry_id);
void set_default_action(Config& cfg, int table, ActionCallSpec call);

// SHA-256 over a canonical serialization. Entry ids are replaced by entry
// positions so that equal tables hash equally regardless of install history.
using Digest = std::array<uint8_t, 32>;
Digest snapshot_hash(const Config& cfg);
void serialize_config(const Config& cfg, std::string* out);
void serialize_value(const Value& v, std::string* out);
std::string digest_hex(const Digest& d);

}  // namespace p4sem

#endif  // P4SEM_RUNTIME_CONFIG_H_
