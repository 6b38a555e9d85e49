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


// Command-line front end: run, stf, search, symex, net, reach, coverage, check.
//
// Exit codes: 0 pass, 1 usage or parse error, 2 stuck state or failed
// property, 3 budget exhausted with a partial result.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "p4sem/common/error.h"
#include "p4sem/explore/search.h"
#include "p4sem/explore/symex.h"
#include "p4sem/harness/stf.h"
#include "p4sem/network/network.h"
#include "p4sem/pipeline/pipeline.h"
#include "p4sem/runtime/control_script.h"

namespace {

using namespace p4sem;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFinding = 2;
constexpr int kExitPartial = 3;

struct NodeArgs {
  std::string program;
  std::string init;
  std::string packets;
  std::string profile;
};

struct SearchArgs {
  std::string focus = "all";
  int64_t max_states = 200000;
  int max_depth = 64;
  int workers = 1;
  std::string report;
};

void add_node_options(CLI::App* app, NodeArgs& a) {
  app->add_option("--init", a.init, "control script with table entries");
  app->add_option("--packets", a.packets, "input packets, one '<port> <hex>' per line");
  app->add_option("--profile", a.profile, "target profile, e.g. zero-registers,drop-undef-egress");
}

void add_search_options(CLI::App* app, SearchArgs& a) {
  app->add_option("--focus", a.focus, "choice kinds to explore (comma list, all, none)");
  app->add_option("--max-states", a.max_states, "state budget");
  app->add_option("--max-depth", a.max_depth, "steps per path");
  app->add_option("--workers", a.workers, "frontier workers");
  app->add_option("--report", a.report, "write the JSON diagnostic report here");
}

SearchOptions search_options(const SearchArgs& a) {
  SearchOptions o;
  o.focus = parse_focus(a.focus);
  o.budget.max_states = a.max_states;
  o.budget.max_depth = a.max_depth;
  o.workers = a.workers;
  return o;
}

std::vector<Packet> read_packets(const std::string& path) {
  std::vector<Packet> out;
  if (path.empty()) return out;
  std::istringstream in(read_text_file(path));
  std::string line;
  uint64_t id = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string port_text, hex, part;
    if (!(ls >> port_text)) continue;
    while (ls >> part) hex += part;
    BigInt port;
    std::vector<uint8_t> bytes;
    if (!parse_integer(port_text, &port) || !parse_hex_bytes(hex, &bytes)) {
      throw Error(ErrorCode::kInvalidArgument,
                  path + ":" + std::to_string(line_no) + ": expected '<port> <hex>'");
    }
    Packet p = Packet::from_bytes(static_cast<int>(port), std::move(bytes));
    p.id = ++id;
    out.push_back(std::move(p));
  }
  return out;
}

struct LoadedNode {
  Program program;
  TargetProfile profile;
};

Program load_program(const std::string& path) {
  Program p = load_program_file(path);
  for (const std::string& w : p.warnings) std::cerr << "warning: " << path << ":" << w << "\n";
  return p;
}

Config node_config(const LoadedNode& n, const NodeArgs& a) {
  Config cfg = new_config(n.program, n.profile);
  if (!a.init.empty()) apply_control_script(cfg, read_text_file(a.init));
  for (Packet& p : read_packets(a.packets)) cfg.in.push_back(std::move(p));
  return cfg;
}

std::string packet_text(const Packet& p) {
  if (p.is_concrete()) return std::to_string(p.port) + " " + bytes_to_hex(p.bytes());
  return p.to_string();
}

void print_outputs(const std::vector<Packet>& out, const std::string& indent = "") {
  for (const Packet& p : out) std::cout << indent << "out " << packet_text(p) << "\n";
}

void write_report(const std::string& path, const std::vector<Diagnostic>& d) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  f << diagnostics_json(d);
}

int finish_search(const std::vector<Diagnostic>& diags, bool partial, const SearchArgs& a) {
  std::cout << diagnostics_text(diags);
  write_report(a.report, diags);
  if (!diags.empty()) return kExitFinding;
  return partial ? kExitPartial : kExitOk;
}

void print_alternatives(const std::map<ChoiceKind, AlternativeStats>& alts) {
  for (const auto& [kind, st] : alts) {
    std::cout << "choice " << choice_kind_name(kind) << ": " << st.points << " points, "
              << st.explored << "/" << st.alternatives << " alternatives explored\n";
  }
}

bool is_topology(const std::string& path) {
  return path.size() > 5 && path.substr(path.size() - 5) == ".topo";
}

int cmd_run(const NodeArgs& a, int64_t max_packets) {
  LoadedNode n{load_program(a.program), parse_profile(a.profile)};
  Config cfg = node_config(n, a);
  run_node(cfg, n.profile, max_packets);
  print_outputs(cfg.out);
  std::cout << "status " << node_status_name(cfg.status) << "\n";
  if (cfg.stuck) {
    std::cout << "STUCK " << stuck_reason_name(cfg.stuck->reason) << " packet "
              << cfg.stuck->packet_id << " at " << cfg.stuck->site << "\n";
    return kExitFinding;
  }
  return cfg.in.empty() ? kExitOk : kExitPartial;
}

int cmd_stf(const std::string& p4, const std::string& stf, const std::string& profile) {
  Program program = load_program(p4);
  StfReport r = run_stf(program, read_text_file(stf), profile);
  print_outputs(r.outputs);
  std::cout << r.to_string();
  return r.pass ? kExitOk : kExitFinding;
}

int cmd_search(const NodeArgs& a, const SearchArgs& s) {
  SearchOptions opts = search_options(s);
  if (is_topology(a.program)) {
    Topology topo = load_topology(a.program);
    NetState net = initial_net_state(topo);
    NetSearchResult r = search_network(net, topo, opts);
    std::cout << r.states << " states, " << r.terminals.size() << " quiescent terminals"
              << (r.partial ? " (partial)" : "") << "\n";
    print_alternatives(r.alternatives);
    return finish_search(r.diagnostics, r.partial, s);
  }
  LoadedNode n{load_program(a.program), parse_profile(a.profile)};
  Config cfg = node_config(n, a);
  SearchResult r = search(cfg, PathCondition{}, n.profile, opts);
  std::cout << r.states << " states, " << distinct_outputs(r.terminals)
            << " distinct terminal outputs" << (r.partial ? " (partial)" : "") << "\n";
  print_alternatives(r.alternatives);
  int i = 0;
  for (const NodeState& t : r.terminals) {
    std::cout << "terminal " << i++ << ":\n";
    print_outputs(t.cfg.out, "  ");
  }
  return finish_search(r.diagnostics, r.partial, s);
}

void print_path(const SymexPath& p) {
  if (p.stuck) {
    std::cout << "STUCK " << stuck_reason_name(p.stuck_info.reason) << " at " << p.stuck_info.site << "\n";
  } else if (p.outputs.empty()) {
    std::cout << "dropped\n";
  } else {
    std::cout << "emitted\n";
    print_outputs(p.outputs, "  ");
  }
  std::cout << "  constraints: " << p.pc.to_string() << "\n";
  for (const Packet& w : p.witness_inputs) std::cout << "  witness: " << packet_text(w) << "\n";
}

int cmd_symex(const NodeArgs& a, const std::string& spec, const std::string& predicate,
              const SearchArgs& s) {
  LoadedNode n{load_program(a.program), parse_profile(a.profile)};
  Config cfg = node_config(n, a);
  cfg.in.clear();
  SymexResult r = symex_run(cfg, n.profile, parse_symbolic_spec(spec), parse_predicate(predicate),
                            search_options(s));
  std::cout << r.paths.size() << " paths, " << r.unknown.size() << " undecided"
            << (r.partial ? " (partial)" : "") << "\n";
  for (const SymexPath& p : r.paths) print_path(p);
  for (const SymexPath& p : r.unknown) {
    std::cout << "[unknown] ";
    print_path(p);
  }
  if (r.partial) return kExitPartial;
  return r.paths.empty() ? kExitOk : kExitFinding;
}

std::vector<std::pair<int, Packet>> read_net_packets(const Topology& topo, const std::string& path) {
  std::vector<std::pair<int, Packet>> out;
  if (path.empty()) return out;
  std::istringstream in(read_text_file(path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string node, port_text, hex, part;
    if (!(ls >> node)) continue;
    ls >> port_text;
    while (ls >> part) hex += part;
    int idx = topo.node_index(node);
    BigInt port;
    std::vector<uint8_t> bytes;
    if (idx < 0 || !parse_integer(port_text, &port) || !parse_hex_bytes(hex, &bytes)) {
      throw Error(ErrorCode::kInvalidArgument,
                  path + ":" + std::to_string(line_no) + ": expected '<node> <port> <hex>'");
    }
    out.emplace_back(idx, Packet::from_bytes(static_cast<int>(port), std::move(bytes)));
  }
  return out;
}

int cmd_net(const std::string& topo_path, const std::string& packets, int64_t steps, bool do_search,
            const SearchArgs& s) {
  Topology topo = load_topology(topo_path);
  NetState net = initial_net_state(topo);
  for (auto& [node, p] : read_net_packets(topo, packets)) inject(net, node, std::move(p));
  if (do_search) {
    NetSearchResult r = search_network(net, topo, search_options(s));
    std::cout << r.states << " states, " << r.terminals.size() << " quiescent terminals"
              << (r.partial ? " (partial)" : "") << "\n";
    print_alternatives(r.alternatives);
    return finish_search(r.diagnostics, r.partial, s);
  }
  int64_t taken = run_network(net, topo, steps);
  for (const auto& [ep, list] : host_captures(net, topo)) {
    for (const Packet& p : list) {
      std::cout << "host " << topo.nodes[ep.node].id << "." << ep.port << " "
                << (p.is_concrete() ? bytes_to_hex(p.bytes()) : p.to_string()) << "\n";
    }
  }
  PacketCounts c = count_packets(net, topo);
  std::cout << taken << " steps; injected " << c.injected << ", at hosts " << c.at_hosts
            << ", in flight " << c.in_flight << ", dropped " << c.dropped << ", lost " << c.lost
            << "\n";
  int rc = kExitOk;
  for (size_t i = 0; i < net.nodes.size(); ++i) {
    const Config& cfg = net.nodes[i];
    if (cfg.stuck) {
      std::cout << "STUCK node " << topo.nodes[i].id << " " << stuck_reason_name(cfg.stuck->reason)
                << " at " << cfg.stuck->site << "\n";
      rc = kExitFinding;
    }
  }
  if (rc == kExitOk && !net_done(net, topo)) rc = kExitPartial;
  return rc;
}

int cmd_reach(const std::string& topo_path, const std::string& src, const std::string& dst,
              const std::string& spec, const SearchArgs& s) {
  Topology topo = load_topology(topo_path);
  int a = topo.node_index(src);
  int b = topo.node_index(dst);
  if (a < 0 || b < 0) throw Error(ErrorCode::kInvalidArgument, "unknown node");
  ReachResult r = reach_query(topo, a, b, parse_symbolic_spec(spec), search_options(s));
  std::cout << r.conditions.size() << " reaching path conditions" << (r.partial ? " (partial)" : "")
            << "\n";
  for (const PathCondition& pc : r.conditions) std::cout << "  " << pc.to_string() << "\n";
  return r.partial ? kExitPartial : kExitOk;
}

int cmd_coverage(const std::string& dir, bool list) {
  CoverageReport r = coverage_run(discover_tests(dir));
  std::cout << r.to_string(list);
  return r.passed == r.tests ? kExitOk : kExitFinding;
}

int cmd_check(const NodeArgs& a, const std::string& spec, const SearchArgs& s) {
  LoadedNode n{load_program(a.program), parse_profile(a.profile)};
  Config cfg = node_config(n, a);
  std::vector<Diagnostic> diags;
  bool partial = false;
  if (!spec.empty()) {
    cfg.in.clear();
    SymbolicSpec sym = parse_symbolic_spec(spec);
    SymexResult r = symex_run(cfg, n.profile, sym, parse_predicate("stuck"), search_options(s));
    partial = r.partial;
    Packet input;
    {
      PathCondition scratch;
      input = make_symbolic_packet(sym, scratch);
    }
    for (const SymexPath& p : r.paths) {
      Diagnostic d;
      d.reason = p.stuck_info.reason;
      d.site = p.stuck_info.site;
      d.packet_id = p.stuck_info.packet_id;
      d.path = p.path;
      d.pc = p.pc;
      attach_witness(d, {input});
      diags.push_back(std::move(d));
    }
    for (const SymexPath& p : r.unknown) {
      std::cout << "[unknown] STUCK " << stuck_reason_name(p.stuck_info.reason) << " at "
                << p.stuck_info.site << ": " << p.pc.to_string() << "\n";
    }
    std::cout << r.states << " states explored\n";
  } else {
    SearchResult r = search(cfg, PathCondition{}, n.profile, search_options(s));
    partial = r.partial;
    diags = std::move(r.diagnostics);
    std::cout << r.states << " states explored\n";
  }
  if (diags.empty()) std::cout << "no stuck states found\n";
  return finish_search(diags, partial, s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p4sem: executable P4_14 semantics"};
  app.require_subcommand(1);

  NodeArgs node;
  SearchArgs sargs;
  int64_t max_packets = 1000000;
  std::string stf_file, stf_profile, symbolic, predicate = "any", packets, dir, src, dst;
  int64_t steps = 1000000;
  bool net_search = false, list_sites = false;

  CLI::App* run = app.add_subcommand("run", "run packets through a program");
  run->add_option("p4", node.program)->required();
  add_node_options(run, node);
  run->add_option("--max-packets", max_packets, "packet pass budget");

  CLI::App* stf = app.add_subcommand("stf", "run an STF test");
  stf->add_option("p4", node.program)->required();
  stf->add_option("stf", stf_file)->required();
  stf->add_option("--profile", stf_profile);

  CLI::App* srch = app.add_subcommand("search", "explore all focused choice points");
  srch->add_option("target", node.program, "program (.p4) or topology (.topo)")->required();
  add_node_options(srch, node);
  add_search_options(srch, sargs);

  CLI::App* sym = app.add_subcommand("symex", "symbolic packet exploration");
  sym->add_option("p4", node.program)->required();
  add_node_options(sym, node);
  sym->add_option("--symbolic", symbolic, "designated fields, e.g. ethernet;max=64")->required();
  sym->add_option("--predicate", predicate, "any, stuck[:REASON], output[:port], drop");
  add_search_options(sym, sargs);

  CLI::App* net = app.add_subcommand("net", "run or search a network");
  net->add_option("topo", node.program)->required();
  net->add_option("--packets", packets, "injected packets, '<node> <port> <hex>' per line");
  net->add_option("--steps", steps, "step budget");
  net->add_flag("--search", net_search, "explore all schedules");
  add_search_options(net, sargs);

  CLI::App* reach = app.add_subcommand("reach", "which packets from src reach dst");
  reach->add_option("topo", node.program)->required();
  reach->add_option("src", src)->required();
  reach->add_option("dst", dst)->required();
  reach->add_option("--symbolic", symbolic)->required();
  add_search_options(reach, sargs);

  CLI::App* cov = app.add_subcommand("coverage", "semantic coverage of a test directory");
  cov->add_option("dir", dir)->required();
  cov->add_flag("--list", list_sites, "list every rule site");

  CLI::App* check = app.add_subcommand("check", "report stuck (unportable) states");
  check->add_option("p4", node.program)->required();
  add_node_options(check, node);
  check->add_option("--symbolic", symbolic, "explore one symbolic packet");
  add_search_options(check, sargs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (*run) return cmd_run(node, max_packets);
    if (*stf) return cmd_stf(node.program, stf_file, stf_profile);
    if (*srch) return cmd_search(node, sargs);
    if (*sym) return cmd_symex(node, symbolic, predicate, sargs);
    if (*net) return cmd_net(node.program, packets, steps, net_search, sargs);
    if (*reach) return cmd_reach(node.program, src, dst, symbolic, sargs);
    if (*cov) return cmd_coverage(dir, list_sites);
    if (*check) return cmd_check(node, symbolic, sargs);
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.message() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
