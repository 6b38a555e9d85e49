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


// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/oracles.h"
#include "p4sem/checksum/checksum.h"
#include "p4sem/common/error.h"
#include "p4sem/common/stuck.h"
#include "p4sem/explore/search.h"
#include "p4sem/explore/symex.h"
#include "p4sem/harness/stf.h"
#include "p4sem/match_action/match_action.h"
#include "p4sem/network/network.h"
#include "p4sem/pipeline/pipeline.h"
#include "p4sem/runtime/control_script.h"
#include "p4sem/values/value.h"

namespace p4sem {
namespace {

using Clock = std::chrono::steady_clock;

std::string corpus_path(const std::string& name, const std::string& ext = ".p4") {
  return std::string(P4SEM_CORPUS_DIR) + "/" + name + "/" + name + ext;
}

std::string data_path(const std::string& rel) { return std::string(P4SEM_DATA_DIR) + "/" + rel; }

struct Outcome {
  bool pass = false;
  std::string detail;
};

Config loaded(const Program& p, const TargetProfile& profile, const std::string& script) {
  Config cfg = new_config(p, profile);
  apply_control_script(cfg, script);
  return cfg;
}

void push_input(Config& cfg, int port, std::vector<uint8_t> bytes) {
  Packet pkt = Packet::from_bytes(port, std::move(bytes));
  pkt.id = cfg.in.size() + cfg.out.size() + cfg.packets_dropped + 1;
  cfg.in.push_back(std::move(pkt));
}

SearchOptions focused(std::string_view spec) {
  SearchOptions o;
  o.focus = parse_focus(spec);
  return o;
}

// Runs the CLI and returns (exit status, stdout).
std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string(P4SEM_CLI_PATH) + " " + args + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  if (f == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
  int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

AtomId atom_named(const PathCondition& pc, const std::string& name) {
  for (size_t i = 0; i < pc.atoms().size(); ++i) {
    if (pc.atoms()[i].name == name) return static_cast<AtomId>(i);
  }
  return -1;
}

// C1: the router's non-IPv4 stuck path, found symbolically and replayed.
Outcome basic_router_case_study() {
  auto start = Clock::now();
  Program p = load_program_file(corpus_path("basic_routing"));
  TargetProfile profile;
  Config cfg = loaded(p, profile, read_text_file(corpus_path("basic_routing", ".ctl")));
  SymexResult r = symex_run(cfg, profile, parse_symbolic_spec("ethernet;port=1"),
                            parse_predicate("stuck:UNDEFINED_EGRESS"));
  int entailing = 0, replayed = 0;
  for (const SymexPath& path : r.paths) {
    AtomId ether_type = atom_named(path.pc, "ethernet.etherType");
    AtomId length = atom_named(path.pc, "packet.length");
    if (ether_type < 0 || length < 0) continue;
    const int lw = path.pc.atoms()[length].width;
    bool present =
        path.pc.entails(Constraint::range(length, lw, 14, (BigInt(1) << lw) - 1));
    bool not_ipv4 = path.pc.entails(Constraint::neq(ether_type, 16, 0x0800));
    if (!present || !not_ipv4) continue;
    ++entailing;
    if (path.witness_inputs.size() != 1) continue;
    Config replay = cfg;
    replay.in.push_back(path.witness_inputs[0]);
    run_node(replay, profile, 10);
    if (replay.stuck && replay.stuck->reason == StuckReason::kUndefinedEgress) ++replayed;
  }
  auto [code, text] = run_cli("check " + corpus_path("basic_routing") + " --init " +
                              corpus_path("basic_routing", ".ctl") + " --symbolic 'ethernet;port=1'");
  bool cli_ok = code == 2 && text.find("STUCK UNDEFINED_EGRESS") != std::string::npos &&
                text.find("ethernet.etherType != 0x800") != std::string::npos;
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream d;
  d << r.paths.size() << " stuck paths, " << entailing << " entail presence and etherType != 0x0800, "
    << replayed << " replayed, cli " << (cli_ok ? "ok" : "mismatch") << ", " << secs << " s";
  return {entailing > 0 && replayed == entailing && cli_ok && !r.partial && secs < 10, d.str()};
}

// C2: every input stream of length <= 6 over a 4-packet alphabet, every
// explored schedule.
Outcome load_balancer_bounded_check() {
  auto start = Clock::now();
  Program p = load_program_file(corpus_path("load_balancer"));
  TargetProfile profile = parse_profile("zero-registers");
  Config base = loaded(p, profile, read_text_file(corpus_path("load_balancer", ".ctl")));
  const std::vector<std::pair<int, std::vector<uint8_t>>> alphabet{
      {0, {0x00}}, {1, {0xFF, 0x01}}, {2, {}}, {3, {0x5A, 0x5A, 0x5A}}};
  long streams = 0, terminals = 0, violations = 0;
  std::string first_violation;
  std::vector<int> stream;
  std::function<void()> visit = [&] {
    Config cfg = base;
    for (int s : stream) push_input(cfg, alphabet[s].first, alphabet[s].second);
    SearchResult r = search(cfg, PathCondition{}, profile, focused("all"));
    ++streams;
    bool bad = r.partial || !r.diagnostics.empty() || r.terminals.empty();
    for (const NodeState& t : r.terminals) {
      ++terminals;
      int n0 = 0, n1 = 0;
      for (const Packet& o : t.cfg.out) {
        if (o.port == 0) ++n0;
        if (o.port == 1) ++n1;
      }
      if (t.cfg.stuck || t.cfg.out.size() != stream.size() ||
          n0 + n1 != static_cast<int>(stream.size()) || std::abs(n0 - n1) > 1) {
        bad = true;
      }
    }
    if (bad) {
      if (violations++ == 0) first_violation = "stream length " + std::to_string(stream.size());
    }
    if (stream.size() == 6) return;
    for (size_t s = 0; s < alphabet.size(); ++s) {
      stream.push_back(static_cast<int>(s));
      visit();
      stream.pop_back();
    }
  };
  visit();
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream d;
  d << streams << " streams, " << terminals << " terminals, " << violations << " violations";
  if (violations > 0) d << " (first: " << first_violation << ")";
  d << ", " << secs << " s";
  return {violations == 0 && streams == 5461 && secs < 60, d.str()};
}

// C3: two admissible deparse orders.
Outcome deparse_order_outputs() {
  Program p = load_program_file(corpus_path("twodeparse"));
  TargetProfile profile;
  Config cfg = loaded(p, profile, "default t => add_both()\n");
  push_input(cfg, 0, {0x01, 0x11});
  SearchResult focused_r = search(cfg, PathCondition{}, profile, focused("deparse-order"));
  Config run = cfg;
  run_node(run, profile, 10);
  std::set<std::string> run_outputs;
  for (const Packet& o : run.out) run_outputs.insert(bytes_to_hex(o.bytes()));
  size_t searched = distinct_outputs(focused_r.terminals);
  std::ostringstream d;
  d << "search " << searched << " distinct outputs, run " << run_outputs.size();
  return {searched == 2 && run_outputs.size() == 1 && run.out.size() == 1, d.str()};
}

// C4: rule-site coverage of the corpus and of a small subset.
Outcome corpus_coverage() {
  std::vector<std::pair<std::string, std::string>> all = discover_tests(P4SEM_CORPUS_DIR);
  CoverageReport full = coverage_run(all);
  CoverageReport tiny = coverage_run({{corpus_path("rewrite"), corpus_path("rewrite", ".stf")},
                                      {corpus_path("load_balancer"), corpus_path("load_balancer", ".stf")},
                                      {corpus_path("twodeparse"), corpus_path("twodeparse", ".stf")}});
  std::ostringstream d;
  d << "corpus " << full.coverage.exercised() << "/" << kSiteCount << " = " << full.fraction()
    << " (" << full.passed << "/" << full.tests << " tests pass), subset " << tiny.fraction();
  return {full.fraction() >= 0.95 && full.passed == full.tests && tiny.tests == 3 &&
              tiny.fraction() < 0.60,
          d.str()};
}

// C5a: apply_binop against the mask oracle, all widths <= 4.
Outcome binop_oracle() {
  long checked = 0, mismatches = 0;
  for (BinOp op : oracle::kAllBinOps) {
    for (int wa = 1; wa <= 4; ++wa) {
      for (int wb = 1; wb <= 4; ++wb) {
        for (int sa = 0; sa < 2; ++sa) {
          for (int sb = 0; sb < 2; ++sb) {
            for (int64_t xa = 0; xa < (1 << wa); ++xa) {
              for (int64_t xb = 0; xb < (1 << wb); ++xb) {
                oracle::Operand a{wa, sa == 1, xa};
                oracle::Operand b{wb, sb == 1, xb};
                int64_t want = 0;
                int want_w = 0;
                bool ok = oracle::binop(op, a, b, &want, &want_w);
                ++checked;
                try {
                  Value got = apply_binop(op, Value::concrete(wa, xa, a.is_signed),
                                          Value::concrete(wb, xb, b.is_signed));
                  if (!ok || got.width() != want_w || got.bits() != want) ++mismatches;
                } catch (const Stuck&) {
                  if (ok) ++mismatches;
                }
              }
            }
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << checked << " cases, " << mismatches << " mismatches";
  return {mismatches == 0 && checked == 16 * 4 * 900, d.str()};
}

const char* kTableProgram = R"(
header_type k_t { fields { a : 8; b : 8; } }
header k_t k;
parser start { extract(k); return ingress; }
action setp(p) { modify_field(standard_metadata.egress_spec, p); }
table t_exact { reads { k.a : exact; } actions { setp; } }
table t_ternary { reads { k.a : ternary; } actions { setp; } }
table t_lpm { reads { k.a : lpm; } actions { setp; } }
table t_range { reads { k.a : range; } actions { setp; } }
table t_mixed { reads { k.a : ternary; k.b : lpm; } actions { setp; } }
control ingress { }
)";

// One table entry for the oracle: per field, accepted iff (key & mask) ==
// (value & mask) and lo <= key <= hi.
struct ScanField {
  int value = 0, mask = 0xFF, lo = 0, hi = 255;
};
struct ScanEntry {
  int prio;
  int port;
  std::vector<ScanField> fields;
};

int scan(const std::vector<ScanEntry>& entries, const std::vector<int>& key) {
  const ScanEntry* best = nullptr;
  for (const ScanEntry& e : entries) {
    bool match = true;
    for (size_t i = 0; i < key.size(); ++i) {
      const ScanField& f = e.fields[i];
      match = match && (key[i] & f.mask) == (f.value & f.mask) && f.lo <= key[i] && key[i] <= f.hi;
    }
    if (match && (best == nullptr || e.prio > best->prio)) best = &e;
  }
  return best == nullptr ? -1 : best->port;
}

// C5b: apply_table against a linear max-priority scan, every key value.
Outcome table_oracle() {
  Program p = load_program_source(kTableProgram);
  TargetProfile profile;
  std::mt19937 rng(2024);
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  FieldRef fa, fb, egress;
  p.resolve_field("k.a", &fa);
  p.resolve_field("k.b", &fb);
  p.resolve_field("standard_metadata.egress_spec", &egress);
  long probes = 0, mismatches = 0, tables = 0;
  const std::vector<std::string> kinds{"exact", "ternary", "lpm", "range", "mixed"};
  for (const std::string& kind : kinds) {
    const int trials = kind == "mixed" ? 2 : 40;
    for (int n = 1; n <= 8; ++n) {
      for (int trial = 0; trial < trials; ++trial) {
        Config cfg = new_config(p, profile);
        CanonicalChooser chooser;
        PathCondition pc;
        ExecContext ctx(cfg, profile, chooser, pc);
        std::vector<int> prios{1, 2, 3, 4, 5, 6, 7, 8};
        std::shuffle(prios.begin(), prios.end(), rng);
        std::vector<ScanEntry> entries;
        std::string script;
        const std::string table = "t_" + kind;
        for (int i = 0; i < n; ++i) {
          ScanEntry e{prios[i], 10 + i, {}};
          std::string line = "add " + table + " " + std::to_string(e.prio);
          // Values are drawn from a narrow band so entries overlap.
          auto ternary = [&](const std::string& f) {
            ScanField s{pick(16), pick(2) ? 0x0F : pick(256), 0, 255};
            line += " " + f + ":" + std::to_string(s.value) + "&&&" + std::to_string(s.mask);
            return s;
          };
          auto lpm = [&](const std::string& f) {
            int len = pick(9);
            ScanField s{pick(256), len == 0 ? 0 : (0xFF << (8 - len)) & 0xFF, 0, 255};
            line += " " + f + ":" + std::to_string(s.value) + "/" + std::to_string(len);
            return s;
          };
          if (kind == "exact") {
            ScanField s{pick(16), 0xFF, 0, 255};
            line += " k.a:" + std::to_string(s.value);
            e.fields.push_back(s);
          } else if (kind == "ternary") {
            e.fields.push_back(ternary("k.a"));
          } else if (kind == "lpm") {
            e.fields.push_back(lpm("k.a"));
          } else if (kind == "range") {
            int lo = pick(256), hi = lo + pick(256 - lo);
            e.fields.push_back({0, 0, lo, hi});
            line += " k.a:[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
          } else {
            e.fields.push_back(ternary("k.a"));
            e.fields.push_back(lpm("k.b"));
          }
          script += line + " => setp(" + std::to_string(e.port) + ")\n";
          entries.push_back(e);
        }
        apply_control_script(cfg, script);
        add_header(cfg, fa.instance.id);
        ++tables;
        const int table_id = p.table_id(table);
        const int b_values = kind == "mixed" ? 256 : 1;
        for (int a = 0; a < 256; ++a) {
          for (int b = 0; b < b_values; ++b) {
            set_field(cfg, fa.instance.id, fa.field, Value::concrete(8, a), "probe");
            set_field(cfg, fb.instance.id, fb.field, Value::concrete(8, b), "probe");
            set_field(cfg, egress.instance.id, egress.field, Value::concrete(9, 0), "probe");
            ApplyResult r = apply_table(ctx, table_id, table);
            int want = scan(entries, kind == "mixed" ? std::vector<int>{a, b} : std::vector<int>{a});
            int got = r.hit ? static_cast<int>(
                                  cfg.instances[egress.instance.id].fields[egress.field].bits())
                            : -1;
            ++probes;
            if (got != want) ++mismatches;
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << tables << " tables of 1..8 entries, " << probes << " probes, " << mismatches
    << " mismatches";
  return {mismatches == 0, d.str()};
}

const char* kPartitionProgram = R"(
header_type h_t { fields { f1 : 8; f2 : 8; } }
header h_t h1;
parser start { extract(h1); return ingress; }
action a(p) { modify_field(standard_metadata.egress_spec, p); }
action kill() { drop(); }
table t {
  reads { h1.f1 : ternary; h1.f2 : range; }
  actions { a; kill; }
}
table u {
  reads { h1.f2 : lpm; }
  actions { a; }
}
control ingress {
  apply(t);
  if (h1.f1 > 0x80) { apply(u); }
}
)";

const char* kPartitionEntries =
    "add t 4 h1.f1:0xA0&&&0xF0 h1.f2:[0,15] => a(1)\n"
    "add t 3 h1.f1:0x0F&&&0x0F h1.f2:[10,200] => a(2)\n"
    "add t 2 h1.f1:0x33&&&0xFF h1.f2:[0,255] => kill()\n"
    "add t 1 h1.f1:0&&&0 h1.f2:[100,255] => a(3)\n"
    "add u 1 h1.f2:0x40/2 => a(4)\n";

// Whether every constraint of `pc` holds under the atom assignment.
bool holds(const PathCondition& pc, const std::map<AtomId, BigInt>& assignment) {
  for (const Constraint& c : pc.constraints()) {
    auto it = assignment.find(c.atom);
    if (it == assignment.end() || !c.holds(it->second)) return false;
  }
  return true;
}

std::string concrete_outcome(const Config& c) {
  if (c.stuck) return "stuck " + std::string(stuck_reason_name(c.stuck->reason));
  if (c.out.empty()) return "drop";
  return "port " + std::to_string(c.out[0].port);
}

std::string path_outcome(const SymexPath& p) {
  if (p.stuck) return "stuck " + std::string(stuck_reason_name(p.stuck_info.reason));
  if (p.outputs.empty()) return "drop";
  return "port " + std::to_string(p.outputs[0].port);
}

// C5c: the path conditions of a 16-bit symbolic run partition the input space,
// and each input's path predicts its concrete outcome.
Outcome symex_partition() {
  Program p = load_program_source(kPartitionProgram);
  TargetProfile profile;
  Config cfg = loaded(p, profile, kPartitionEntries);
  SymexResult r = symex_run(cfg, profile, parse_symbolic_spec("h1;len=2"), parse_predicate("any"));
  long uncovered = 0, overlapping = 0, wrong = 0;
  bool atoms_ok = true;
  std::set<std::string> outcomes;
  for (const SymexPath& path : r.paths) {
    if (atom_named(path.pc, "h1.f1") != 0 || atom_named(path.pc, "h1.f2") != 1) atoms_ok = false;
  }
  for (int v = 0; v < 65536 && atoms_ok; ++v) {
    const int f1 = v >> 8, f2 = v & 0xFF;
    std::map<AtomId, BigInt> assignment{{0, BigInt(f1)}, {1, BigInt(f2)}};
    const SymexPath* owner = nullptr;
    int owners = 0;
    for (const SymexPath& path : r.paths) {
      if (holds(path.pc, assignment)) {
        ++owners;
        owner = &path;
      }
    }
    if (owners == 0) ++uncovered;
    if (owners > 1) ++overlapping;
    if (owner == nullptr) continue;
    Config c = cfg;
    push_input(c, 0, {static_cast<uint8_t>(f1), static_cast<uint8_t>(f2)});
    run_node(c, profile, 10);
    std::string want = concrete_outcome(c);
    outcomes.insert(want);
    if (path_outcome(*owner) != want) ++wrong;
  }
  std::ostringstream d;
  d << r.paths.size() << " paths over 16 bits, " << outcomes.size() << " outcomes, " << uncovered
    << " uncovered, " << overlapping << " overlapping, " << wrong << " mispredicted";
  return {atoms_ok && r.unknown.empty() && !r.partial && uncovered == 0 && overlapping == 0 &&
              wrong == 0 && outcomes.size() >= 4,
          d.str()};
}

// C5d: check values, and the library against bitwise recomputation.
Outcome checksum_check_values() {
  const std::vector<uint8_t> check{'1', '2', '3', '4', '5', '6', '7', '8', '9'};
  const std::vector<uint8_t> rfc{0x00, 0x01, 0xF2, 0x03, 0xF4, 0xF5, 0xF6, 0xF7};
  bool values = csum16(rfc) == 0x220D && oracle::csum16(rfc) == 0x220D &&
                crc16(check) == 0xBB3D && oracle::crc16(check) == 0xBB3D &&
                crc32(check) == 0xCBF43926u && oracle::crc32(check) == 0xCBF43926u;
  std::mt19937 rng(5);
  long mismatches = 0;
  for (int i = 0; i < 2000; ++i) {
    std::vector<uint8_t> b(rng() % 64);
    for (uint8_t& x : b) x = static_cast<uint8_t>(rng());
    if (csum16(b) != oracle::csum16(b) || crc16(b) != oracle::crc16(b) ||
        crc32(b) != oracle::crc32(b)) {
      ++mismatches;
    }
  }
  std::ostringstream d;
  d << "check values " << (values ? "match" : "differ") << ", 2000 random buffers, " << mismatches
    << " mismatches";
  return {values && mismatches == 0, d.str()};
}

const char* kRoundTripProgram = R"(
header_type a_t { fields { x : 3; y : 5; z : 12; w : 4; } }
header_type b_t { fields { p : 16; q : 1; r : 7; s : 32; } }
header a_t first;
header b_t second;
header a_t third;
parser start { extract(first); extract(second); return parse_third; }
parser parse_third { extract(third); return ingress; }
action out() { modify_field(standard_metadata.egress_spec, 1); }
table t { actions { out; } }
control ingress { apply(t); }
)";

// C6a: parse then deparse is the identity on unmodified single-path programs.
Outcome parse_deparse_round_trip() {
  struct Case {
    std::string name;
    Program program;
    std::string script;
    int min_bytes;
  };
  std::vector<Case> cases;
  cases.push_back({"three headers", load_program_source(kRoundTripProgram), "default t => out()\n", 14});
  cases.push_back({"rewrite", load_program_file(corpus_path("rewrite")), "default t => b()\n", 2});
  std::mt19937 rng(77);
  long packets = 0, mismatches = 0;
  TargetProfile profile;
  for (Case& c : cases) {
    Config base = loaded(c.program, profile, c.script);
    for (int i = 0; i < 500; ++i) {
      std::vector<uint8_t> bytes(c.min_bytes + rng() % 24);
      for (uint8_t& x : bytes) x = static_cast<uint8_t>(rng());
      Config cfg = base;
      push_input(cfg, 0, bytes);
      run_node(cfg, profile, 10);
      ++packets;
      if (cfg.stuck || cfg.out.size() != 1 || cfg.out[0].bytes() != bytes) ++mismatches;
    }
  }
  std::ostringstream d;
  d << packets << " random packets, " << mismatches << " mismatches";
  return {packets == 1000 && mismatches == 0, d.str()};
}

// Uniformly random choices.
class RandomChooser : public Chooser {
 public:
  explicit RandomChooser(uint32_t seed) : rng_(seed) {}
  int choose(ChoiceKind, int n, std::string_view) override {
    return std::uniform_int_distribution<int>(0, n - 1)(rng_);
  }

 private:
  std::mt19937 rng_;
};

// C6b: packet conservation after every step of random schedules.
Outcome network_conservation() {
  const std::string dir = data_path("net");
  std::vector<Topology> topologies{
      load_topology(data_path("net/chain3.topo")),
      parse_topology("node a relay.p4 profile=fifo-links init=relay.ctl\n"
                     "node b relay.p4 profile=fifo-links init=relay.ctl\n"
                     "node c relay.p4 profile=fifo-links init=relay.ctl\n"
                     "link a.1 b.0\nlink b.1 c.0\n",
                     dir)};
  long schedules = 0, violations = 0, steps = 0;
  for (uint32_t seed = 0; seed < 500; ++seed) {
    const Topology& t = topologies[seed % topologies.size()];
    RandomChooser chooser(seed);
    std::mt19937 rng(seed);
    NetState net = initial_net_state(t);
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      inject(net, 0, Packet::from_bytes(0, {static_cast<uint8_t>(rng() % 3), 0xEE}));
    }
    auto conserved = [&] {
      PacketCounts c = count_packets(net, t);
      return c.injected == static_cast<uint64_t>(n) &&
             c.injected == c.at_hosts + c.in_flight + c.dropped + c.lost && c.lost == 0;
    };
    bool ok = conserved();
    for (int step = 0; step < 10000 && net_step(net, t, chooser); ++step) {
      ++steps;
      ok = ok && conserved();
    }
    ok = ok && net_done(net, t) && count_packets(net, t).in_flight == 0;
    ++schedules;
    if (!ok) ++violations;
  }
  std::ostringstream d;
  d << schedules << " schedules, " << steps << " steps, " << violations << " violations";
  return {violations == 0 && schedules == 500, d.str()};
}

struct ModeResult {
  std::vector<std::pair<int, std::string>> outputs;
  std::optional<StuckReason> stuck;
};

ModeResult observe(const Config& c) {
  ModeResult m;
  for (const Packet& o : c.out) m.outputs.emplace_back(o.port, bytes_to_hex(o.bytes()));
  if (c.stuck) m.stuck = c.stuck->reason;
  return m;
}

bool same(const ModeResult& a, const ModeResult& b) {
  return a.outputs == b.outputs && a.stuck == b.stuck;
}

// C7: run mode equals search with an empty focus on corpus programs, driven
// by each program's test script.
Outcome run_equals_empty_search() {
  std::map<std::string, bool> programs;
  long packets = 0, stuck = 0;
  std::string first_diff;
  for (const auto& [p4, stf] : discover_tests(P4SEM_CORPUS_DIR)) {
    Program p = load_program_file(p4);
    std::vector<StfStatement> script = parse_stf(read_text_file(stf));
    TargetProfile profile;
    if (!script.empty() && script[0].kind == StfStatement::Kind::kProfile) {
      profile = parse_profile(script[0].text);
    }
    Config cfg = new_config(p, profile);
    bool ok = true;
    for (const StfStatement& s : script) {
      if (s.kind == StfStatement::Kind::kControl) {
        apply_control_line(cfg, s.text, s.line);
      } else if (s.kind == StfStatement::Kind::kPacket) {
        if (cfg.stuck) break;
        push_input(cfg, s.port, s.bytes);
        Config run = cfg;
        run_node(run, profile, 100);
        SearchResult r = search(cfg, PathCondition{}, profile, focused("none"));
        ++packets;
        bool equal;
        if (run.stuck) {
          // Search reports stuck states as diagnostics rather than terminals.
          equal = r.terminals.empty() && r.diagnostics.size() == 1 &&
                  r.diagnostics[0].reason == run.stuck->reason &&
                  r.diagnostics[0].packet_id == run.stuck->packet_id &&
                  r.diagnostics[0].site == run.stuck->site;
          ++stuck;
        } else {
          equal = r.terminals.size() == 1 && r.diagnostics.empty() &&
                  same(observe(run), observe(r.terminals[0].cfg)) &&
                  snapshot_hash(run) == snapshot_hash(r.terminals[0].cfg);
        }
        if (!equal || r.partial) {
          ok = false;
          if (first_diff.empty()) first_diff = stf + ":" + std::to_string(s.line);
        }
        cfg = run;
      }
    }
    auto it = programs.find(p4);
    programs[p4] = (it == programs.end() || it->second) && ok;
  }
  int equal = 0;
  for (const auto& [name, ok] : programs) equal += ok ? 1 : 0;
  std::ostringstream d;
  d << equal << "/" << programs.size() << " programs identical over " << packets << " packets (" << stuck
    << " stuck)";
  if (!first_diff.empty()) d << ", first difference at " << first_diff;
  return {programs.size() >= 20 && equal == static_cast<int>(programs.size()), d.str()};
}

}  // namespace
}  // namespace p4sem

int main() {
  using p4sem::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C1 basic router stuck path", p4sem::basic_router_case_study},
      {"C2 load balancer bounded check", p4sem::load_balancer_bounded_check},
      {"C3 deparse order outputs", p4sem::deparse_order_outputs},
      {"C4 rule-site coverage", p4sem::corpus_coverage},
      {"C5a binop oracle", p4sem::binop_oracle},
      {"C5b table oracle", p4sem::table_oracle},
      {"C5c symbolic partition", p4sem::symex_partition},
      {"C5d checksum check values", p4sem::checksum_check_values},
      {"C6a parse/deparse round trip", p4sem::parse_deparse_round_trip},
      {"C6b network conservation", p4sem::network_conservation},
      {"C7 run equals empty-focus search", p4sem::run_equals_empty_search},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
