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


#include "p4sem/explore/symex.h"

#include <memory>

#include "p4sem/common/error.h"
#include "p4sem/runtime/control_script.h"

namespace p4sem {

namespace {

constexpr int kLengthAtomWidth = 16;

int parse_int_option(std::string_view key, std::string_view value) {
  BigInt v;
  if (!parse_script_number(value, &v) || v < 0 || v > 65535) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad value '" + std::string(value) + "' for symbolic option " + std::string(key));
  }
  return static_cast<int>(v);
}

}  // namespace

SymbolicSpec parse_symbolic_spec(std::string_view text) {
  SymbolicSpec spec;
  size_t semi = text.find(';');
  std::string_view fields = text.substr(0, semi);
  size_t start = 0;
  while (start <= fields.size()) {
    size_t comma = fields.find(',', start);
    std::string_view f = fields.substr(start, comma == std::string_view::npos ? comma : comma - start);
    if (!f.empty()) spec.designations.insert(std::string(f));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  while (semi != std::string_view::npos) {
    size_t next = text.find(';', semi + 1);
    std::string_view opt = text.substr(semi + 1, next == std::string_view::npos ? next : next - semi - 1);
    semi = next;
    size_t eq = opt.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument, "bad symbolic option '" + std::string(opt) + "'");
    }
    std::string_view key = opt.substr(0, eq);
    std::string_view value = opt.substr(eq + 1);
    if (key == "len") {
      spec.fixed_bytes = parse_int_option(key, value);
    } else if (key == "max") {
      spec.max_bytes = parse_int_option(key, value);
    } else if (key == "port") {
      spec.port = parse_int_option(key, value);
    } else if (key == "base") {
      if (!parse_hex_bytes(value, &spec.base)) {
        throw Error(ErrorCode::kInvalidArgument, "bad base bytes '" + std::string(value) + "'");
      }
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown symbolic option '" + std::string(key) + "'");
    }
  }
  return spec;
}

Packet make_symbolic_packet(const SymbolicSpec& spec, PathCondition& pc) {
  Packet p;
  p.id = spec.packet_id;
  p.port = spec.port;
  SymbolicTail tail;
  tail.base = std::make_shared<const std::vector<uint8_t>>(spec.base);
  tail.designations = std::make_shared<const std::set<std::string>>(spec.designations);
  if (spec.fixed_bytes) {
    tail.fixed_bytes = *spec.fixed_bytes;
  } else {
    AtomInfo len;
    len.name = "packet.length";
    len.width = kLengthAtomWidth;
    len.is_length = true;
    len.packet_id = spec.packet_id;
    tail.length_atom = pc.new_atom(len);
    pc.add(Constraint::range(tail.length_atom, kLengthAtomWidth, 0, spec.max_bytes));
  }
  p.tail = std::move(tail);
  return p;
}

PathPredicate parse_predicate(std::string_view text) {
  if (text.empty() || text == "any") return [](const SymexPath&) { return true; };
  if (text == "stuck") return [](const SymexPath& p) { return p.stuck; };
  if (text == "drop") return [](const SymexPath& p) { return !p.stuck && p.outputs.empty(); };
  if (text == "output") return [](const SymexPath& p) { return !p.outputs.empty(); };
  if (text.starts_with("stuck:")) {
    StuckReason reason;
    if (!parse_stuck_reason(text.substr(6), &reason)) {
      throw Error(ErrorCode::kInvalidArgument, "unknown stuck reason '" + std::string(text.substr(6)) + "'");
    }
    return [reason](const SymexPath& p) { return p.stuck && p.stuck_info.reason == reason; };
  }
  if (text.starts_with("output:")) {
    BigInt port;
    if (!parse_script_number(text.substr(7), &port)) {
      throw Error(ErrorCode::kInvalidArgument, "bad port in predicate '" + std::string(text) + "'");
    }
    int want = static_cast<int>(port);
    return [want](const SymexPath& p) {
      for (const Packet& out : p.outputs) {
        if (out.port == want) return true;
      }
      return false;
    };
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown predicate '" + std::string(text) + "'");
}

SymexResult symex_run(const Config& initial, const TargetProfile& profile,
                      const SymbolicSpec& spec, const PathPredicate& predicate,
                      SearchOptions options) {
  Config cfg = initial;
  PathCondition pc;
  Packet input = make_symbolic_packet(spec, pc);
  cfg.in.push_back(input);
  options.focus.insert(ChoiceKind::kSymbolicBranch);
  SearchResult sr = search(cfg, pc, profile, options);

  SymexResult out;
  out.states = sr.states;
  out.partial = sr.partial;
  auto record = [&](SymexPath path) {
    path.solution = path.pc.solve();
    if (path.solution.status == SatStatus::kUnsat) return;
    if (path.solution.status == SatStatus::kSat) {
      path.witness_inputs.push_back(concretize_input(input, path.pc, path.solution.witness));
    }
    if (!predicate(path)) return;
    bool unknown = path.pc.unknown() || path.solution.status == SatStatus::kUnknown;
    (unknown ? out.unknown : out.paths).push_back(std::move(path));
  };
  for (NodeState& s : sr.terminals) {
    SymexPath p;
    p.pc = std::move(s.pc);
    p.outputs = std::move(s.cfg.out);
    p.path = std::move(s.path);
    record(std::move(p));
  }
  for (Diagnostic& d : sr.diagnostics) {
    SymexPath p;
    p.pc = std::move(d.pc);
    p.stuck = true;
    p.stuck_info = StuckInfo{d.reason, d.site, d.packet_id};
    p.path = std::move(d.path);
    record(std::move(p));
  }
  return out;
}

}  // namespace p4sem
