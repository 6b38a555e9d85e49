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


#include "p4sem/network/network.h"

#include <filesystem>
#include <set>
#include <sstream>

#include "p4sem/common/error.h"
#include "p4sem/pipeline/pipeline.h"
#include "p4sem/runtime/control_script.h"

namespace p4sem {

namespace {

[[noreturn]] void topo_error(int line, const std::string& msg) {
  throw Error(ErrorCode::kTopoParseError, "topology line " + std::to_string(line) + ": " + msg);
}

std::string resolve_path(const std::string& base_dir, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_absolute() || base_dir.empty()) return p;
  return (std::filesystem::path(base_dir) / path).string();
}

Endpoint parse_endpoint(const Topology& topo, const std::string& text, int line) {
  size_t dot = text.rfind('.');
  if (dot == std::string::npos) topo_error(line, "endpoint '" + text + "' is not <node>.<port>");
  int node = topo.node_index(text.substr(0, dot));
  if (node < 0) topo_error(line, "unknown node '" + text.substr(0, dot) + "'");
  BigInt port;
  if (!parse_integer(text.substr(dot + 1), &port) || port < 0 || port > 65535) {
    topo_error(line, "bad port in '" + text + "'");
  }
  return {node, static_cast<int>(port)};
}

// Ready actions in schedule order: node ids first, then link ids.
struct Action {
  bool process = true;
  int index = 0;
};

bool port_has_packet(const Config& cfg, int port) {
  for (const Packet& p : cfg.out) {
    if (p.port == port) return true;
  }
  return false;
}

std::vector<Action> ready_actions(const NetState& net, const Topology& topo) {
  std::vector<Action> out;
  for (size_t i = 0; i < net.nodes.size(); ++i) {
    const Config& c = net.nodes[i];
    if (c.status != NodeStatus::kStuck && !c.in.empty()) out.push_back({true, static_cast<int>(i)});
  }
  for (size_t l = 0; l < topo.links.size(); ++l) {
    const Link& link = topo.links[l];
    if (port_has_packet(net.nodes[link.from.node], link.from.port)) {
      out.push_back({false, static_cast<int>(l)});
    }
  }
  return out;
}

std::vector<Packet> all_inputs(const NetState& net) {
  std::vector<Packet> out;
  for (const Config& c : net.nodes) out.insert(out.end(), c.in.begin(), c.in.end());
  return out;
}

}  // namespace

int Topology::node_index(const std::string& id) const {
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

Topology parse_topology(std::string_view text, const std::string& base_dir) {
  Topology topo;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "node") {
      if (tok.size() < 3) topo_error(line_no, "expected: node <id> <path.p4> [profile=..] [init=..]");
      if (topo.node_index(tok[1]) >= 0) topo_error(line_no, "duplicate node '" + tok[1] + "'");
      NodeSpec n;
      n.id = tok[1];
      n.program_path = resolve_path(base_dir, tok[2]);
      std::string profile;
      for (size_t i = 3; i < tok.size(); ++i) {
        if (tok[i].starts_with("profile=")) {
          profile = tok[i].substr(8);
        } else if (tok[i].starts_with("init=")) {
          n.init_path = resolve_path(base_dir, tok[i].substr(5));
        } else {
          topo_error(line_no, "unknown node option '" + tok[i] + "'");
        }
      }
      try {
        n.profile = parse_profile(profile);
        n.program = std::make_shared<const Program>(load_program_file(n.program_path));
        if (!n.init_path.empty()) read_text_file(n.init_path);
      } catch (const Error& e) {
        throw Error(e.code(), "node " + n.id + ": " + e.message(), e.span());
      }
      topo.nodes.push_back(std::move(n));
    } else if (tok[0] == "link") {
      if (tok.size() < 3 || tok.size() > 4 || (tok.size() == 4 && tok[3] != "lossy")) {
        topo_error(line_no, "expected: link <a>.<port> <b>.<port> [lossy]");
      }
      Link l;
      l.from = parse_endpoint(topo, tok[1], line_no);
      l.to = parse_endpoint(topo, tok[2], line_no);
      l.lossy = tok.size() == 4;
      if (topo.link_from.count(l.from)) {
        topo_error(line_no, "endpoint " + tok[1] + " is already the source of a link");
      }
      topo.link_from[l.from] = static_cast<int>(topo.links.size());
      topo.links.push_back(l);
    } else {
      topo_error(line_no, "unknown statement '" + tok[0] + "'");
    }
  }
  if (topo.nodes.empty()) throw Error(ErrorCode::kTopoParseError, "topology declares no nodes");
  return topo;
}

Topology load_topology(const std::string& path) {
  std::string text = read_text_file(path);
  return parse_topology(text, std::filesystem::path(path).parent_path().string());
}

NetState initial_net_state(const Topology& topo) {
  NetState net;
  for (const NodeSpec& n : topo.nodes) {
    Config cfg = new_config(*n.program, n.profile);
    if (!n.init_path.empty()) {
      try {
        apply_control_script(cfg, read_text_file(n.init_path));
      } catch (const Error& e) {
        throw Error(e.code(), "node " + n.id + ": " + e.message(), e.span());
      }
    }
    net.nodes.push_back(std::move(cfg));
  }
  net.received.assign(topo.nodes.size(), 0);
  return net;
}

void inject(NetState& net, int node, Packet p) {
  p.id = ++net.injected;
  net.nodes[node].in.push_back(std::move(p));
}

bool deliver(NetState& net, const Topology& topo, int link, Chooser& chooser) {
  const Link& l = topo.links[link];
  Config& src = net.nodes[l.from.node];
  Config& dst = net.nodes[l.to.node];
  const bool fifo = topo.nodes[l.to.node].profile.fifo_links;
  // Default rule takes the newest packet on the port; fifo takes the oldest.
  int pick = -1;
  for (int i = 0; i < static_cast<int>(src.out.size()); ++i) {
    if (src.out[i].port != l.from.port) continue;
    pick = i;
    if (fifo) break;
  }
  if (pick < 0) return false;
  Packet p = std::move(src.out[pick]);
  src.out.erase(src.out.begin() + pick);
  if (l.lossy && chooser.choose(ChoiceKind::kLinkLoss, 2, "link loss") == 1) {
    ++net.lost;
    return true;
  }
  p.port = l.to.port;
  p.instance_type = kInstanceNormal;
  p.skip_ingress = false;
  p.carried.reset();
  p.carried_fields.clear();
  if (fifo) {
    dst.in.push_back(std::move(p));
  } else {
    dst.in.push_front(std::move(p));
  }
  if (dst.status == NodeStatus::kAwaitingInput) dst.status = NodeStatus::kRunning;
  ++net.received[l.to.node];
  return true;
}

bool net_step(NetState& net, const Topology& topo, Chooser& chooser, Coverage* coverage,
              const EngineOptions& engine) {
  std::vector<Action> ready = ready_actions(net, topo);
  if (ready.empty()) return false;
  int pick = ready.size() < 2 ? 0
                              : chooser.choose(ChoiceKind::kNetworkSchedule,
                                               static_cast<int>(ready.size()), "schedule");
  const Action& a = ready[pick];
  if (a.process) {
    process_packet(net.nodes[a.index], topo.nodes[a.index].profile, chooser, net.pc, coverage, engine);
  } else {
    deliver(net, topo, a.index, chooser);
  }
  return true;
}

bool net_done(const NetState& net, const Topology& topo) { return ready_actions(net, topo).empty(); }

std::string net_key(const NetState& net) {
  std::string k;
  for (const Config& c : net.nodes) k += digest_hex(snapshot_hash(c)) + "/";
  net.pc.serialize(&k);
  k += "/" + std::to_string(net.lost);
  for (uint64_t r : net.received) k += "," + std::to_string(r);
  return k;
}

int64_t run_network(NetState& net, const Topology& topo, int64_t max_steps, Coverage* coverage) {
  CanonicalChooser chooser;
  int64_t steps = 0;
  while (steps < max_steps && net_step(net, topo, chooser, coverage)) ++steps;
  return steps;
}

std::map<Endpoint, std::vector<Packet>> host_captures(const NetState& net, const Topology& topo) {
  std::map<Endpoint, std::vector<Packet>> out;
  for (size_t i = 0; i < net.nodes.size(); ++i) {
    for (const Packet& p : net.nodes[i].out) {
      Endpoint e{static_cast<int>(i), p.port};
      if (!topo.link_from.count(e)) out[e].push_back(p);
    }
  }
  return out;
}

PacketCounts count_packets(const NetState& net, const Topology& topo) {
  PacketCounts c;
  c.injected = net.injected;
  c.lost = net.lost;
  for (size_t i = 0; i < net.nodes.size(); ++i) {
    const Config& cfg = net.nodes[i];
    c.dropped += cfg.packets_dropped;
    if (cfg.status == NodeStatus::kStuck) ++c.dropped;
    c.in_flight += cfg.in.size();
    for (const Packet& p : cfg.out) {
      if (topo.link_from.count({static_cast<int>(i), p.port})) {
        ++c.in_flight;
      } else {
        ++c.at_hosts;
      }
    }
  }
  return c;
}

namespace {

BfsOutcome<NetState> explore_network(const NetState& initial, const Topology& topo,
                                     const SearchOptions& options) {
  return bfs(
      initial, options, [&](const NetState& s) { return net_done(s, topo); },
      [&](NetState& s, Chooser& ch, Coverage* cov) { net_step(s, topo, ch, cov, options.engine); },
      net_key);
}

}  // namespace

NetSearchResult search_network(const NetState& initial, const Topology& topo,
                               const SearchOptions& options) {
  BfsOutcome<NetState> o = explore_network(initial, topo, options);
  std::vector<Packet> inputs = all_inputs(initial);
  NetSearchResult r;
  r.states = o.states;
  r.partial = o.partial;
  r.alternatives = std::move(o.alternatives);
  for (NetState& s : o.terminals) {
    bool stuck = false;
    for (size_t i = 0; i < s.nodes.size(); ++i) {
      const Config& c = s.nodes[i];
      if (c.status != NodeStatus::kStuck) continue;
      stuck = true;
      Diagnostic d;
      d.reason = c.stuck->reason;
      d.site = c.stuck->site;
      d.node = topo.nodes[i].id;
      d.packet_id = c.stuck->packet_id;
      d.path = s.path;
      d.pc = s.pc;
      attach_witness(d, inputs);
      r.diagnostics.push_back(std::move(d));
    }
    if (!stuck) r.terminals.push_back(std::move(s));
  }
  return r;
}

ReachResult reach_query(const Topology& topo, int src, int dst, const SymbolicSpec& spec,
                        SearchOptions options) {
  ReachResult r;
  if (src == dst) {
    r.conditions.emplace_back();
    return r;
  }
  NetState net = initial_net_state(topo);
  SymbolicSpec s = spec;
  s.packet_id = net.injected + 1;
  Packet p = make_symbolic_packet(s, net.pc);
  inject(net, src, std::move(p));
  options.focus.insert(ChoiceKind::kSymbolicBranch);
  BfsOutcome<NetState> o = explore_network(net, topo, options);
  r.partial = o.partial;
  std::set<std::string> seen;
  auto consider = [&](const NetState& st) {
    if (st.received[dst] == 0) return;
    if (st.pc.solve().status == SatStatus::kUnsat) return;
    std::string key;
    st.pc.serialize(&key);
    if (seen.insert(key).second) r.conditions.push_back(st.pc);
  };
  for (const NetState& st : o.terminals) consider(st);
  for (const NetState& st : o.cut) consider(st);
  return r;
}

}  // namespace p4sem
