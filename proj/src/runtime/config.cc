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


#include "p4sem/runtime/config.h"

#include <openssl/evp.h>

#include <algorithm>

#include "p4sem/common/error.h"

namespace p4sem {

std::string_view node_status_name(NodeStatus s) {
  switch (s) {
    case NodeStatus::kRunning: return "running";
    case NodeStatus::kAwaitingInput: return "awaiting-input";
    case NodeStatus::kStuck: return "stuck";
  }
  return "?";
}

InstanceState initial_instance_state(const Program& program, InstanceId id) {
  const InstanceInfo& info = program.instances[id];
  const HeaderType& type = program.header_types[info.type];
  InstanceState st;
  st.valid = info.metadata;
  st.fields.resize(type.fields.size());
  if (info.metadata) {
    for (size_t f = 0; f < type.fields.size(); ++f) {
      auto it = info.initial.find(static_cast<int>(f));
      st.fields[f] = it != info.initial.end()
                         ? it->second
                         : Value::concrete(type.fields[f].width, 0, type.fields[f].is_signed);
    }
  }
  return st;
}

void reset_instances(Config& cfg) {
  const Program& p = *cfg.program;
  cfg.instances.resize(p.instances.size());
  for (size_t i = 0; i < p.instances.size(); ++i) {
    cfg.instances[i] = initial_instance_state(p, static_cast<InstanceId>(i));
  }
}

Config new_config(const Program& program, const TargetProfile& profile) {
  Config cfg;
  cfg.program = &program;
  cfg.zero_registers = profile.zero_registers;
  reset_instances(cfg);
  cfg.statefuls.resize(program.statefuls.size());
  cfg.tables.resize(program.tables.size());
  return cfg;
}

const Value& get_field(const Config& cfg, InstanceId inst, int field, const std::string& site) {
  const InstanceState& st = cfg.instances[inst];
  if (!st.valid) {
    throw Stuck(StuckReason::kReadInvalidHeader,
                site + ": read of " + cfg.program->instances[inst].name + " while invalid");
  }
  return st.fields[field];
}

void set_field(Config& cfg, InstanceId inst, int field, const Value& v, const std::string& site) {
  InstanceState& st = cfg.instances[inst];
  const Program& p = *cfg.program;
  if (!st.valid) {
    throw Stuck(StuckReason::kWriteInvalidHeader,
                site + ": write to " + p.instances[inst].name + " while invalid");
  }
  const FieldInfo& f = p.type_of(inst).fields[field];
  if (f.varbit) {
    st.fields[field] = v;
    return;
  }
  if (v.is_undef()) {
    st.fields[field] = v;
    return;
  }
  st.fields[field] = fit_to_field(v, f.width, f.is_signed);
}

void add_header(Config& cfg, InstanceId inst) {
  InstanceState& st = cfg.instances[inst];
  if (st.valid) return;
  const HeaderType& t = cfg.program->type_of(inst);
  st.valid = true;
  for (size_t f = 0; f < t.fields.size(); ++f) {
    st.fields[f] = t.fields[f].varbit ? Value::empty_varbit()
                                      : Value::concrete(t.fields[f].width, 0, t.fields[f].is_signed);
  }
}

void remove_header(Config& cfg, InstanceId inst) {
  InstanceState& st = cfg.instances[inst];
  st.valid = false;
  for (Value& v : st.fields) v = Value::undef();
}

void copy_header(Config& cfg, InstanceId dst, InstanceId src, const std::string& site) {
  const Program& p = *cfg.program;
  if (p.instances[dst].type != p.instances[src].type) {
    throw Stuck(StuckReason::kUnspecifiedPrimitiveCase,
                site + ": copy_header between different header types");
  }
  cfg.instances[dst] = cfg.instances[src];
}

InstanceId stack_next(const Config& cfg, int stack) {
  for (InstanceId e : cfg.program->stacks[stack].elements) {
    if (!cfg.instances[e].valid) return e;
  }
  return -1;
}

InstanceId stack_last(const Config& cfg, int stack) {
  InstanceId last = -1;
  for (InstanceId e : cfg.program->stacks[stack].elements) {
    if (cfg.instances[e].valid) last = e;
  }
  return last;
}

int stack_valid_count(const Config& cfg, int stack) {
  int n = 0;
  for (InstanceId e : cfg.program->stacks[stack].elements) n += cfg.instances[e].valid ? 1 : 0;
  return n;
}

void stack_push(Config& cfg, int stack, int64_t count, const std::string& site) {
  const std::vector<InstanceId>& el = cfg.program->stacks[stack].elements;
  const int64_t size = static_cast<int64_t>(el.size());
  if (count <= 0 || count > size) {
    throw Stuck(StuckReason::kBadStackOp, site + ": push count " + std::to_string(count) +
                                              " on stack of size " + std::to_string(size));
  }
  for (int64_t i = size - 1; i >= count; --i) cfg.instances[el[i]] = cfg.instances[el[i - count]];
  for (int64_t i = 0; i < count; ++i) {
    remove_header(cfg, el[i]);
    add_header(cfg, el[i]);
  }
}

void stack_pop(Config& cfg, int stack, int64_t count, const std::string& site) {
  const std::vector<InstanceId>& el = cfg.program->stacks[stack].elements;
  const int64_t size = static_cast<int64_t>(el.size());
  if (count <= 0 || count > size) {
    throw Stuck(StuckReason::kBadStackOp, site + ": pop count " + std::to_string(count) +
                                              " on stack of size " + std::to_string(size));
  }
  for (int64_t i = 0; i + count < size; ++i) cfg.instances[el[i]] = cfg.instances[el[i + count]];
  for (int64_t i = size - count; i < size; ++i) remove_header(cfg, el[i]);
}

// ---- statefuls ----

Value stateful_initial(const Config& cfg, int stateful) {
  const StatefulInfo& s = cfg.program->statefuls[stateful];
  if (s.kind == StatefulKind::kRegister && !cfg.zero_registers) return Value::undef();
  return Value::concrete(s.width, 0, s.is_signed);
}

namespace {

void check_index(const Config& cfg, int stateful, int64_t index, const std::string& site) {
  const StatefulInfo& s = cfg.program->statefuls[stateful];
  if (s.direct_table >= 0) {
    for (const TableEntry& e : cfg.tables[s.direct_table].entries) {
      if (e.id == index) return;
    }
    throw Stuck(StuckReason::kIndexOob,
                site + ": " + s.name + " has no entry with id " + std::to_string(index));
  }
  if (index < 0 || index >= *s.instance_count) {
    throw Stuck(StuckReason::kIndexOob, site + ": index " + std::to_string(index) + " of " +
                                            s.name + " outside [0, " +
                                            std::to_string(*s.instance_count) + ")");
  }
}

void store(Config& cfg, int stateful, int64_t index, const Value& v) {
  if (v == stateful_initial(cfg, stateful)) {
    cfg.statefuls[stateful].erase(index);
  } else {
    cfg.statefuls[stateful][index] = v;
  }
}

}  // namespace

Value stateful_read(const Config& cfg, int stateful, int64_t index) {
  auto it = cfg.statefuls[stateful].find(index);
  return it == cfg.statefuls[stateful].end() ? stateful_initial(cfg, stateful) : it->second;
}

Value register_read(const Config& cfg, int reg, int64_t index, const std::string& site) {
  check_index(cfg, reg, index, site);
  return stateful_read(cfg, reg, index);
}

void register_write(Config& cfg, int reg, int64_t index, const Value& v, const std::string& site) {
  check_index(cfg, reg, index, site);
  const StatefulInfo& s = cfg.program->statefuls[reg];
  store(cfg, reg, index, v.is_undef() ? v : fit_to_field(v, s.width, s.is_signed));
}

void count_increment(Config& cfg, int counter, int64_t index, uint64_t bytes,
                     const std::string& site) {
  check_index(cfg, counter, index, site);
  const StatefulInfo& s = cfg.program->statefuls[counter];
  BigInt cur = stateful_read(cfg, counter, index).bits();
  BigInt next;
  if (s.width == 128) {
    BigInt packets = ((cur >> 64) + 1) & low_mask(64);
    BigInt byte_count = ((cur & low_mask(64)) + bytes) & low_mask(64);
    next = (packets << 64) | byte_count;
  } else {
    next = (cur + (s.bytes ? BigInt(bytes) : BigInt(1))) & low_mask(s.width);
  }
  store(cfg, counter, index, Value::concrete(s.width, next));
}

void meter_execute(Config& cfg, int meter, int64_t index, const std::string& site) {
  check_index(cfg, meter, index, site);
  const StatefulInfo& s = cfg.program->statefuls[meter];
  BigInt cur = stateful_read(cfg, meter, index).bits();
  store(cfg, meter, index, Value::concrete(s.width, (cur + 1) & low_mask(s.width)));
}

// ---- tables ----

namespace {

[[noreturn]] void script_error(const std::string& msg) {
  throw Error(ErrorCode::kControlScriptError, msg);
}

void check_fits(const BigInt& v, int width, const std::string& what) {
  if (v < 0 || v > low_mask(width)) {
    script_error(what + " value " + to_hex(v) + " does not fit in " + std::to_string(width) +
                 " bits");
  }
}

}  // namespace

int64_t install_entry(Config& cfg, int table, TableEntry entry) {
  const Program& p = *cfg.program;
  const TableInfo& t = p.tables.at(table);
  if (entry.matches.size() != t.reads.size()) {
    script_error("table " + t.name + " has " + std::to_string(t.reads.size()) + " reads, entry gives " +
                 std::to_string(entry.matches.size()));
  }
  for (size_t i = 0; i < t.reads.size(); ++i) {
    const TableReadInfo& r = t.reads[i];
    MatchSpec& m = entry.matches[i];
    if (m.kind != r.kind) {
      script_error("read " + r.text + " of " + t.name + " is " +
                   std::string(match_kind_name(r.kind)) + ", entry gives " +
                   std::string(match_kind_name(m.kind)));
    }
    switch (m.kind) {
      case MatchKind::kExact:
        check_fits(m.value, r.width, r.text);
        break;
      case MatchKind::kTernary:
        check_fits(m.value, r.width, r.text);
        check_fits(m.mask, r.width, r.text + " mask");
        break;
      case MatchKind::kLpm:
        check_fits(m.value, r.width, r.text);
        if (m.prefix_len < 0 || m.prefix_len > r.width) {
          script_error("prefix length " + std::to_string(m.prefix_len) + " for " + r.text);
        }
        m.mask = low_mask(r.width) ^ low_mask(r.width - m.prefix_len);
        break;
      case MatchKind::kRange:
        check_fits(m.value, r.width, r.text);
        check_fits(m.hi, r.width, r.text);
        if (m.value > m.hi) script_error("empty range for " + r.text);
        break;
      case MatchKind::kValid:
        if (m.value > 1) script_error("valid match must be 0 or 1");
        break;
    }
  }
  if (std::find(t.actions.begin(), t.actions.end(), entry.action) == t.actions.end()) {
    script_error("action is not listed in table " + t.name);
  }
  if (entry.args.size() != p.actions[entry.action].params.size()) {
    script_error("action " + p.actions[entry.action].name + " takes " +
                 std::to_string(p.actions[entry.action].params.size()) + " arguments");
  }
  TableState& ts = cfg.tables[table];
  for (const TableEntry& e : ts.entries) {
    if (e.priority == entry.priority) {
      script_error("duplicate priority " + std::to_string(entry.priority) + " in " + t.name);
    }
  }
  if (t.size && static_cast<int>(ts.entries.size()) >= *t.size) {
    script_error("table " + t.name + " is full");
  }
  entry.id = cfg.next_entry_id++;
  auto pos = std::find_if(ts.entries.begin(), ts.entries.end(),
                          [&](const TableEntry& e) { return e.priority < entry.priority; });
  int64_t id = entry.id;
  ts.entries.insert(pos, std::move(entry));
  return id;
}

bool remove_entry(Config& cfg, int table, int64_t entry_id) {
  auto& entries = cfg.tables[table].entries;
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const TableEntry& e) { return e.id == entry_id; });
  if (it == entries.end()) return false;
  entries.erase(it);
  for (int s : cfg.program->tables[table].direct_statefuls) cfg.statefuls[s].erase(entry_id);
  return true;
}

void set_default_action(Config& cfg, int table, ActionCallSpec call) {
  const Program& p = *cfg.program;
  const TableInfo& t = p.tables.at(table);
  if (std::find(t.actions.begin(), t.actions.end(), call.action) == t.actions.end()) {
    script_error("default action is not listed in table " + t.name);
  }
  if (call.args.size() != p.actions[call.action].params.size()) {
    script_error("wrong number of arguments for default action of " + t.name);
  }
  cfg.tables[table].default_action = std::move(call);
}

// ---- snapshot ----

namespace {

void put_int(int64_t v, std::string* out) {
  for (int i = 0; i < 8; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_str(const std::string& s, std::string* out) {
  put_int(static_cast<int64_t>(s.size()), out);
  out->append(s);
}

void put_big(const BigInt& v, std::string* out) { put_str(v.str(), out); }

void put_packet(const Packet& p, std::string* out) {
  put_int(p.port, out);
  put_int(p.skip_ingress, out);
  put_int(p.instance_type, out);
  put_int(static_cast<int64_t>(p.segments.size()), out);
  for (const PacketSegment& s : p.segments) {
    if (s.symbolic) {
      out->push_back('s');
      serialize_value(s.value, out);
    } else {
      out->push_back('c');
      put_int(static_cast<int64_t>(s.bits.size()), out);
      out->append(s.bits.bytes().begin(), s.bits.bytes().end());
    }
  }
  if (p.tail) {
    out->push_back('t');
    put_int(p.tail->length_atom, out);
    put_int(p.tail->fixed_bytes, out);
    put_int(static_cast<int64_t>(p.tail->from_bit), out);
    out->append(p.tail->base->begin(), p.tail->base->end());
    if (p.tail->designations) {
      for (const std::string& d : *p.tail->designations) put_str(d, out);
    }
  }
  put_int(static_cast<int64_t>(p.carried_fields.size()), out);
  for (const CarriedField& c : p.carried_fields) {
    put_int(c.instance, out);
    put_int(c.field, out);
    serialize_value(c.value, out);
  }
  if (p.carried) {
    out->push_back('k');
    put_int(p.carried->egress_port, out);
    put_int(static_cast<int64_t>(p.carried->payload_offset), out);
    for (const InstanceState& st : p.carried->instances) {
      out->push_back(st.valid ? 'v' : 'i');
      for (const Value& v : st.fields) serialize_value(v, out);
    }
  }
}

}  // namespace

void serialize_value(const Value& v, std::string* out) {
  switch (v.kind()) {
    case Value::Kind::kUndef:
      out->push_back('U');
      return;
    case Value::Kind::kConcrete:
      out->push_back(v.is_signed() ? 'S' : 'C');
      put_int(v.width(), out);
      put_big(v.bits(), out);
      return;
    case Value::Kind::kSymbolic:
      out->push_back('Y');
      put_int(v.atom(), out);
      put_int(v.slice_lo(), out);
      put_int(v.slice_width(), out);
      put_int(v.width(), out);
      put_int(v.is_signed(), out);
      return;
  }
}

void serialize_config(const Config& cfg, std::string* out) {
  for (const InstanceState& st : cfg.instances) {
    out->push_back(st.valid ? 'v' : 'i');
    for (const Value& v : st.fields) serialize_value(v, out);
  }
  const Program& p = *cfg.program;
  for (size_t s = 0; s < cfg.statefuls.size(); ++s) {
    out->push_back('#');
    const StatefulInfo& info = p.statefuls[s];
    for (const auto& [index, v] : cfg.statefuls[s]) {
      int64_t key = index;
      if (info.direct_table >= 0) {
        // Direct cells are keyed by the entry's position, not its id.
        const auto& entries = cfg.tables[info.direct_table].entries;
        for (size_t pos = 0; pos < entries.size(); ++pos) {
          if (entries[pos].id == index) key = static_cast<int64_t>(pos);
        }
      }
      put_int(key, out);
      serialize_value(v, out);
    }
  }
  for (const TableState& t : cfg.tables) {
    out->push_back('T');
    for (const TableEntry& e : t.entries) {
      put_int(e.priority, out);
      for (const MatchSpec& m : e.matches) {
        put_int(static_cast<int>(m.kind), out);
        put_big(m.value, out);
        put_big(m.mask, out);
        put_big(m.hi, out);
        put_int(m.prefix_len, out);
      }
      put_int(e.action, out);
      for (const Value& a : e.args) serialize_value(a, out);
    }
    if (t.default_action) {
      out->push_back('D');
      put_int(t.default_action->action, out);
      for (const Value& a : t.default_action->args) serialize_value(a, out);
    }
  }
  out->push_back('I');
  for (const Packet& pk : cfg.in) put_packet(pk, out);
  out->push_back('O');
  for (const Packet& pk : cfg.out) put_packet(pk, out);
  out->push_back('G');
  for (const DigestRecord& d : cfg.digests) {
    put_big(d.receiver, out);
    for (const Value& v : d.values) serialize_value(v, out);
  }
  for (const auto& [session, port] : cfg.mirror_sessions) {
    put_int(session, out);
    put_int(port, out);
  }
  put_int(static_cast<int>(cfg.status), out);
  if (cfg.stuck) {
    put_int(static_cast<int>(cfg.stuck->reason), out);
    put_str(cfg.stuck->site, out);
  }
}

Digest snapshot_hash(const Config& cfg) {
  std::string buf;
  serialize_config(cfg, &buf);
  Digest d{};
  unsigned int len = 0;
  EVP_Digest(buf.data(), buf.size(), d.data(), &len, EVP_sha256(), nullptr);
  return d;
}

std::string digest_hex(const Digest& d) {
  return bytes_to_hex(std::vector<uint8_t>(d.begin(), d.end()));
}

}  // namespace p4sem
