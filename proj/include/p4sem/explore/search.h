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


#ifndef P4SEM_EXPLORE_SEARCH_H_
#define P4SEM_EXPLORE_SEARCH_H_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "p4sem/explore/bfs.h"
#include "p4sem/runtime/config.h"

namespace p4sem {

// One node between packets, with the constraints of the path that led here.
struct NodeState {
  Config cfg;
  PathCondition pc;
  std::vector<int> path;
  int depth = 0;
};

// A stuck state found by exploration.
struct Diagnostic {
  StuckReason reason = StuckReason::kUndefInExpr;
  std::string site;
  std::string node;  // node id for network searches
  uint64_t packet_id = 0;
  std::vector<int> path;
  PathCondition pc;
  SatStatus sat = SatStatus::kSat;
  std::map<std::string, BigInt> witness;  // atom name -> value
  std::vector<Packet> witness_inputs;     // concrete inputs reproducing the path
};

struct SearchResult {
  std::vector<NodeState> terminals;  // not stuck
  std::vector<Diagnostic> diagnostics;
  std::map<ChoiceKind, AlternativeStats> alternatives;
  int64_t states = 0;
  bool partial = false;
};

// Explores every execution of `initial` (with its queued input packets) over
// the focused choice kinds; others take their canonical alternative.
SearchResult search(const Config& initial, const PathCondition& pc, const TargetProfile& profile,
                    const SearchOptions& options);

// One packet step of a node state (used by search and replays).
void node_step(NodeState& s, const TargetProfile& profile, Chooser& chooser, Coverage* coverage,
               const EngineOptions& engine);
bool node_done(const NodeState& s);
std::string node_key(const NodeState& s);

// Number of distinct output sequences among terminals.
size_t distinct_outputs(const std::vector<NodeState>& terminals);

// Concrete packet for a symbolic input under a witness: template bytes with
// the atom values written at their origins, cut to the witnessed length.
Packet concretize_input(const Packet& p, const PathCondition& pc,
                        const std::map<AtomId, BigInt>& witness);

// Solves `pc` and fills the sat status, named witness and concrete inputs.
void attach_witness(Diagnostic& d, const std::vector<Packet>& inputs);

// Line-oriented report and the structured (JSON) report.
std::string diagnostics_text(const std::vector<Diagnostic>& diagnostics);
std::string diagnostics_json(const std::vector<Diagnostic>& diagnostics);

}  // namespace p4sem

#endif  // P4SEM_EXPLORE_SEARCH_H_
