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


#ifndef P4SEM_EXPLORE_SYMEX_H_
#define P4SEM_EXPLORE_SYMEX_H_

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "p4sem/explore/search.h"

namespace p4sem {

// A symbolic input packet. Designated fields ("ethernet", "ipv4.ttl", "*")
// become atoms when extracted; every other bit comes from `base` (zero past
// its end). The length is fixed, or an atom bounded by `max_bytes`.
struct SymbolicSpec {
  std::set<std::string> designations;
  std::optional<int> fixed_bytes;
  int max_bytes = 256;
  std::vector<uint8_t> base;
  int port = 0;
  uint64_t packet_id = 1;
};

// "ethernet,ipv4.ttl[;len=N|;max=N][;port=P]" -> spec.
SymbolicSpec parse_symbolic_spec(std::string_view text);

Packet make_symbolic_packet(const SymbolicSpec& spec, PathCondition& pc);

// One explored path of a symbolic run.
struct SymexPath {
  PathCondition pc;
  SatResult solution;
  bool stuck = false;
  StuckInfo stuck_info;
  std::vector<Packet> outputs;
  std::vector<Packet> witness_inputs;
  std::vector<int> path;
};

using PathPredicate = std::function<bool(const SymexPath&)>;

// any | stuck | stuck:<REASON> | output | output:<port> | drop
PathPredicate parse_predicate(std::string_view text);

struct SymexResult {
  std::vector<SymexPath> paths;    // satisfiable paths meeting the predicate
  std::vector<SymexPath> unknown;  // undecided paths meeting the predicate
  int64_t states = 0;
  bool partial = false;
};

// Runs one symbolic packet through `initial` (tables populated, `in` empty),
// forking at every symbolic branch and also over the focused kinds.
SymexResult symex_run(const Config& initial, const TargetProfile& profile,
                      const SymbolicSpec& spec, const PathPredicate& predicate,
                      SearchOptions options = {});

}  // namespace p4sem

#endif  // P4SEM_EXPLORE_SYMEX_H_
