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


#ifndef P4SEM_NETWORK_NETWORK_H_
#define P4SEM_NETWORK_NETWORK_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "p4sem/explore/search.h"
#include "p4sem/explore/symex.h"

namespace p4sem {

struct Endpoint {
  int node = -1;
  int port = 0;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Link {
  Endpoint from;
  Endpoint to;
  bool lossy = false;
};

struct NodeSpec {
  std::string id;
  std::string program_path;
  std::shared_ptr<const Program> program;
  TargetProfile profile;
  std::string init_path;  // control script, may be empty
};

struct Topology {
  std::vector<NodeSpec> nodes;
  std::vector<Link> links;
  std::map<Endpoint, int> link_from;  // source endpoint -> link

  int node_index(const std::string& id) const;
};

// A whole network between steps.
struct NetState {
  std::vector<Config> nodes;
  PathCondition pc;
  std::vector<int> path;
  int depth = 0;
  uint64_t injected = 0;
  uint64_t lost = 0;               // dropped by lossy links
  std::vector<uint64_t> received;  // packets delivered into each node
};

// Parses a topology file; relative program and script paths resolve against
// `base_dir`. Throws Error(kTopoParseError), or a node's own error with the
// node id prefixed to the message.
Topology parse_topology(std::string_view text, const std::string& base_dir);
Topology load_topology(const std::string& path);

// Fresh node configs with their control scripts applied.
NetState initial_net_state(const Topology& topo);

// Queues a packet at a node's input, assigning the next packet id.
void inject(NetState& net, int node, Packet p);

// Moves one packet across `link`: the last packet on the source port leaves
// the source's output and enters the head of the destination's input
// (tail to tail under fifo-links). Lossy links are a link-loss choice.
// Returns false when no packet waits on the source port.
bool deliver(NetState& net, const Topology& topo, int link, Chooser& chooser);

// One network step: the ready actions are "node i processes a packet" in
// node order, then "deliver on link j" in link order; which one runs is a
// network-schedule choice. Returns false when the network is quiescent.
bool net_step(NetState& net, const Topology& topo, Chooser& chooser, Coverage* coverage = nullptr,
              const EngineOptions& engine = {});

bool net_done(const NetState& net, const Topology& topo);
std::string net_key(const NetState& net);

// Canonical run for at most `max_steps` steps; returns the steps taken.
int64_t run_network(NetState& net, const Topology& topo, int64_t max_steps,
                    Coverage* coverage = nullptr);

// Packets left on ports without a link, per endpoint.
std::map<Endpoint, std::vector<Packet>> host_captures(const NetState& net, const Topology& topo);

// Conservation counters: injected = at hosts + in flight + dropped + lost.
struct PacketCounts {
  uint64_t injected = 0;
  uint64_t at_hosts = 0;
  uint64_t in_flight = 0;
  uint64_t dropped = 0;
  uint64_t lost = 0;
};
PacketCounts count_packets(const NetState& net, const Topology& topo);

struct NetSearchResult {
  std::vector<NetState> terminals;  // quiescent, no node stuck
  std::vector<Diagnostic> diagnostics;
  std::map<ChoiceKind, AlternativeStats> alternatives;
  int64_t states = 0;
  bool partial = false;
};

NetSearchResult search_network(const NetState& initial, const Topology& topo,
                               const SearchOptions& options);

// Constraint sets of the symbolic packets injected at `src` that reach
// `dst` (on any port). `src == dst` gives one empty set.
struct ReachResult {
  std::vector<PathCondition> conditions;
  bool partial = false;
};
ReachResult reach_query(const Topology& topo, int src, int dst, const SymbolicSpec& spec,
                        SearchOptions options = {});

}  // namespace p4sem

#endif  // P4SEM_NETWORK_NETWORK_H_
