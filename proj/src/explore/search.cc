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


#include "p4sem/explore/search.h"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "p4sem/pipeline/pipeline.h"

namespace p4sem {

namespace {

std::string big_hex(const BigInt& v) { return to_hex(v); }

void put_bits(std::vector<uint8_t>& buf, size_t bit, const BigInt& v, int width) {
  for (int i = 0; i < width; ++i) {
    size_t b = bit + i;
    if (b / 8 >= buf.size()) return;
    bool one = bit_test(v, width - 1 - i);
    uint8_t m = static_cast<uint8_t>(0x80 >> (b % 8));
    buf[b / 8] = one ? (buf[b / 8] | m) : (buf[b / 8] & ~m);
  }
}

Diagnostic diagnostic_of(const NodeState& s) {
  Diagnostic d;
  d.reason = s.cfg.stuck->reason;
  d.site = s.cfg.stuck->site;
  d.packet_id = s.cfg.stuck->packet_id;
  d.path = s.path;
  d.pc = s.pc;
  return d;
}

}  // namespace

void node_step(NodeState& s, const TargetProfile& profile, Chooser& chooser, Coverage* coverage,
               const EngineOptions& engine) {
  process_packet(s.cfg, profile, chooser, s.pc, coverage, engine);
}

bool node_done(const NodeState& s) {
  return s.cfg.status == NodeStatus::kStuck || s.cfg.in.empty();
}

std::string node_key(const NodeState& s) {
  std::string k = digest_hex(snapshot_hash(s.cfg));
  s.pc.serialize(&k);
  return k;
}

SearchResult search(const Config& initial, const PathCondition& pc, const TargetProfile& profile,
                    const SearchOptions& options) {
  NodeState start{initial, pc, {}, 0};
  std::vector<Packet> inputs(initial.in.begin(), initial.in.end());
  BfsOutcome<NodeState> o = bfs(
      std::move(start), options, node_done,
      [&](NodeState& s, Chooser& ch, Coverage* cov) { node_step(s, profile, ch, cov, options.engine); },
      node_key);
  SearchResult r;
  r.states = o.states;
  r.partial = o.partial;
  r.alternatives = std::move(o.alternatives);
  for (NodeState& s : o.terminals) {
    if (s.cfg.status == NodeStatus::kStuck) {
      Diagnostic d = diagnostic_of(s);
      attach_witness(d, inputs);
      r.diagnostics.push_back(std::move(d));
    } else {
      r.terminals.push_back(std::move(s));
    }
  }
  return r;
}

size_t distinct_outputs(const std::vector<NodeState>& terminals) {
  std::set<std::string> seen;
  for (const NodeState& s : terminals) {
    std::string k;
    for (const Packet& p : s.cfg.out) k += p.to_string() + "\n";
    seen.insert(k);
  }
  return seen.size();
}

Packet concretize_input(const Packet& p, const PathCondition& pc,
                        const std::map<AtomId, BigInt>& witness) {
  if (p.is_concrete()) return p;
  auto value_of = [&](AtomId a) {
    auto it = witness.find(a);
    return it == witness.end() ? BigInt(0) : it->second;
  };
  Packet out;
  out.id = p.id;
  out.port = p.port;
  out.instance_type = p.instance_type;
  out.carried_fields = p.carried_fields;
  for (const PacketSegment& seg : p.segments) {
    if (!seg.symbolic) {
      out.append_bits(seg.bits);
      continue;
    }
    const Value& v = seg.value;
    BigInt x = (value_of(v.atom()) >> v.slice_lo()) & low_mask(v.slice_width());
    BitString b;
    b.append(x, v.width());
    out.append_bits(b);
  }
  if (p.tail) {
    const SymbolicTail& t = *p.tail;
    size_t len = t.length_atom >= 0 ? static_cast<size_t>(value_of(t.length_atom))
                                    : static_cast<size_t>(t.fixed_bytes);
    std::vector<uint8_t> buf(*t.base);
    buf.resize(len, 0);
    const std::vector<AtomInfo>& atoms = pc.atoms();
    for (size_t a = 0; a < atoms.size(); ++a) {
      const AtomInfo& info = atoms[a];
      if (info.is_length || info.origin_bit < 0 || info.packet_id != p.id) continue;
      put_bits(buf, static_cast<size_t>(info.origin_bit), value_of(static_cast<AtomId>(a)), info.width);
    }
    BitString all = BitString::from_bytes(std::move(buf));
    if (t.from_bit < all.size()) out.append_bits(all.slice(t.from_bit, all.size() - t.from_bit));
  }
  return out;
}

void attach_witness(Diagnostic& d, const std::vector<Packet>& inputs) {
  SatResult sr = d.pc.solve();
  d.sat = d.pc.unknown() && sr.status == SatStatus::kSat ? SatStatus::kUnknown : sr.status;
  if (sr.status != SatStatus::kSat) return;
  for (const auto& [atom, v] : sr.witness) d.witness[d.pc.atoms()[atom].name] = v;
  for (const Packet& p : inputs) d.witness_inputs.push_back(concretize_input(p, d.pc, sr.witness));
}

std::string diagnostics_text(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const Diagnostic& d : diagnostics) {
    out += "STUCK " + std::string(stuck_reason_name(d.reason));
    if (!d.node.empty()) out += " node " + d.node;
    out += " packet " + std::to_string(d.packet_id) + " at " + d.site + "\n";
    out += "  constraints: " + d.pc.to_string() + " [" + std::string(sat_status_name(d.sat)) + "]\n";
    if (!d.witness.empty()) {
      out += "  witness:";
      for (const auto& [name, v] : d.witness) out += " " + name + "=" + big_hex(v);
      out += "\n";
    }
    for (const Packet& p : d.witness_inputs) {
      out += "  input: port " + std::to_string(p.port) + " " + bytes_to_hex(p.bytes()) + "\n";
    }
  }
  return out;
}

std::string diagnostics_json(const std::vector<Diagnostic>& diagnostics) {
  nlohmann::json records = nlohmann::json::array();
  for (const Diagnostic& d : diagnostics) {
    nlohmann::json r;
    r["reason"] = std::string(stuck_reason_name(d.reason));
    r["site"] = d.site;
    if (!d.node.empty()) r["node"] = d.node;
    r["packet_id"] = d.packet_id;
    r["path"] = d.path;
    nlohmann::json cs = nlohmann::json::array();
    for (const Constraint& c : d.pc.constraints()) cs.push_back(c.to_string(d.pc.atoms()[c.atom].name));
    r["constraints"] = cs;
    r["sat"] = std::string(sat_status_name(d.sat));
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [name, v] : d.witness) w[name] = big_hex(v);
    r["witness"] = w;
    nlohmann::json inputs = nlohmann::json::array();
    for (const Packet& p : d.witness_inputs) {
      inputs.push_back({{"port", p.port}, {"bytes", bytes_to_hex(p.bytes())}});
    }
    r["witness_inputs"] = inputs;
    records.push_back(std::move(r));
  }
  return records.dump(2) + "\n";
}

}  // namespace p4sem
