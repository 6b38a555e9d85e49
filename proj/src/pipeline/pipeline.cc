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


#include "p4sem/pipeline/pipeline.h"

#include <algorithm>
#include <map>

#include "p4sem/match_action/match_action.h"
#include "p4sem/parser_engine/parser_engine.h"

namespace p4sem {

namespace {

void set_standard(ExecContext& ctx, const std::string& name, const Value& v) {
  int f = standard_field(ctx.program, name);
  if (f >= 0) set_field(ctx.cfg, ctx.program.standard_metadata, f, v, "standard_metadata");
}

Value get_standard(ExecContext& ctx, const std::string& name) {
  int f = standard_field(ctx.program, name);
  if (f < 0) return Value::undef();
  return ctx.cfg.instances[ctx.program.standard_metadata].fields[f];
}

void restore_fields(ExecContext& ctx, const std::vector<CarriedField>& fields) {
  for (const CarriedField& c : fields) {
    InstanceState& st = ctx.cfg.instances[c.instance];
    if (!st.valid) continue;
    set_field(ctx.cfg, c.instance, c.field, c.value, "carried field");
  }
}

int session_port(const Config& cfg, const BigInt& session) {
  auto it = cfg.mirror_sessions.find(static_cast<int64_t>(session & low_mask(62)));
  if (it != cfg.mirror_sessions.end()) return it->second;
  return static_cast<int>(session & low_mask(31));
}

Packet derived(const Packet& from, int instance_type, std::vector<CarriedField> fields) {
  Packet p = from;
  p.skip_ingress = false;
  p.carried.reset();
  p.instance_type = instance_type;
  p.carried_fields = std::move(fields);
  return p;
}

// A packet that re-enters at egress with the given parsed representation.
Packet skip_ingress_copy(const ExecContext& ctx, const std::vector<InstanceState>& instances,
                         int port, int instance_type, std::vector<CarriedField> fields) {
  Packet p = derived(ctx.packet, instance_type, std::move(fields));
  p.skip_ingress = true;
  auto carried = std::make_shared<CarriedState>();
  carried->instances = instances;
  carried->egress_port = port;
  carried->payload_offset = ctx.offset;
  p.carried = std::move(carried);
  return p;
}

void count_drop(ExecContext& ctx, Site site) {
  ctx.hit(site);
  ++ctx.cfg.packets_dropped;
}

void run_packet(ExecContext& ctx) {
  Config& cfg = ctx.cfg;
  const Program& p = ctx.program;
  const Packet& pkt = ctx.packet;

  reset_instances(cfg);
  set_standard(ctx, "ingress_port", Value::from_int(32, pkt.port));
  set_standard(ctx, "instance_type", Value::from_int(32, pkt.instance_type));
  Value len = packet_length_value(ctx);
  if (!len.is_undef()) set_standard(ctx, "packet_length", len);

  std::vector<InstanceState> parsed;  // parsed representation for I2E clones
  Value egress_spec;
  if (pkt.skip_ingress) {
    ctx.hit(Site::kPipeSkipIngress);
    for (size_t i = 0; i < p.instances.size(); ++i) {
      if (!p.instances[i].metadata) cfg.instances[i] = pkt.carried->instances[i];
    }
    ctx.offset = pkt.carried->payload_offset;
    restore_fields(ctx, pkt.carried_fields);
    egress_spec = Value::from_int(32, pkt.carried->egress_port);
    set_standard(ctx, "egress_spec", egress_spec);
  } else {
    if (pkt.instance_type == kInstanceResubmitted) ctx.hit(Site::kPipeResubmitted);
    if (pkt.instance_type == kInstanceRecirculated) ctx.hit(Site::kPipeRecirculated);
    restore_fields(ctx, pkt.carried_fields);
    ParseOutcome parse = run_parser(ctx);
    if (parse.dropped) {
      count_drop(ctx, Site::kPipeDropIngress);
      return;
    }
    parsed = cfg.instances;
    ctx.hit(Site::kPipeIngress);
    exec_control(ctx, parse.control);

    for (const PendingClone& c : ctx.clones) {
      if (c.op == PrimitiveOp::kCloneI2I) {
        cfg.in.push_back(derived(pkt, kInstanceIngressClone, c.fields));
      } else {
        cfg.in.push_back(
            skip_ingress_copy(ctx, parsed, session_port(cfg, c.session), kInstanceIngressClone, c.fields));
      }
    }
    ctx.clones.clear();
    if (ctx.resubmit) {
      cfg.in.push_back(derived(pkt, kInstanceResubmitted, *ctx.resubmit));
      return;
    }
    if (ctx.dropped) {
      count_drop(ctx, Site::kPipeDropIngress);
      return;
    }
    egress_spec = get_standard(ctx, "egress_spec");
    if (egress_spec.is_undef()) {
      ctx.hit(Site::kPipeUndefinedEgress);
      if (ctx.profile.drop_undefined_egress) {
        ++cfg.packets_dropped;
        return;
      }
      throw Stuck(StuckReason::kUndefinedEgress, "end of ingress: egress_spec is @undef");
    }
  }

  egress_spec = concretize(ctx, egress_spec, "egress_spec");
  set_standard(ctx, "egress_port", egress_spec);
  const int port = static_cast<int>(egress_spec.as_u64());

  ctx.in_egress = true;
  ctx.dropped = false;
  if (p.egress >= 0) {
    ctx.hit(Site::kPipeEgress);
    exec_control(ctx, p.egress);
  }

  bool needs_deparse = !ctx.dropped;
  for (const PendingClone& c : ctx.clones) needs_deparse |= c.op == PrimitiveOp::kCloneE2I;
  Packet out;
  if (needs_deparse) {
    update_calculated_fields(ctx);
    out = deparse(ctx);
    if (ctx.truncate_bytes) {
      ctx.hit(Site::kPipeTruncated);
      truncate_packet(out, *ctx.truncate_bytes, "truncate");
    }
  }
  for (const PendingClone& c : ctx.clones) {
    if (c.op == PrimitiveOp::kCloneE2I) {
      Packet e = derived(out, kInstanceEgressClone, c.fields);
      e.port = pkt.port;
      cfg.in.push_back(std::move(e));
    } else {
      cfg.in.push_back(skip_ingress_copy(ctx, cfg.instances, session_port(cfg, c.session),
                                         kInstanceEgressClone, c.fields));
    }
  }
  if (ctx.dropped) {
    count_drop(ctx, Site::kPipeDropEgress);
    return;
  }
  if (ctx.recirculate) {
    Packet r = derived(out, kInstanceRecirculated, *ctx.recirculate);
    r.port = pkt.port;
    cfg.in.push_back(std::move(r));
    return;
  }
  ctx.hit(Site::kPipeEmit);
  out.port = port;
  cfg.out.push_back(std::move(out));
}

}  // namespace

int standard_field(const Program& program, const std::string& name) {
  if (program.standard_metadata < 0) return -1;
  return program.type_of(program.standard_metadata).field_index(name);
}

void update_calculated_fields(ExecContext& ctx) {
  const Program& p = ctx.program;
  std::vector<const CalcBindingInfo*> todo;
  for (const CalcBindingInfo& b : p.update_bindings) {
    if (!ctx.cfg.instances[b.instance].valid) continue;
    if (b.condition && !truthy(ctx, eval(ctx, *b.condition, b.site), b.site)) continue;
    todo.push_back(&b);
  }
  int k = static_cast<int>(todo.size());
  if (k == 0) return;
  int pick = ctx.choose(ChoiceKind::kUpdateOrder, static_cast<int>(factorial(k)), "update");
  for (int i : nth_permutation(k, pick)) {
    const CalcBindingInfo& b = *todo[i];
    ctx.hit(Site::kUpdateChecksum);
    BigInt h = compute_calculation(ctx, b.calculation, b.site);
    const FieldInfo& fi = p.type_of(b.instance).fields[b.field];
    set_field(ctx.cfg, b.instance, b.field, Value::from_int(fi.width, h, fi.is_signed), b.site);
  }
}

Packet deparse(ExecContext& ctx) {
  const Program& p = ctx.program;
  const DeparseOrders& d = p.deparse;
  ctx.hit(Site::kPipeDeparse);
  std::map<int, std::vector<InstanceId>> members;
  for (InstanceId i = 0; i < static_cast<InstanceId>(p.instances.size()); ++i) {
    int unit = d.unit_of_instance[i];
    if (unit >= 0 && ctx.cfg.instances[i].valid) members[unit].push_back(i);
  }
  std::vector<int> units;
  for (const auto& [unit, insts] : members) units.push_back(unit);
  std::vector<std::vector<int>> orders = d.orders_for(units);
  int pick = ctx.choose(ChoiceKind::kDeparseOrder, static_cast<int>(orders.size()), "deparse");
  const std::vector<int>& order = orders.empty() ? units : orders[pick];

  Packet out;
  out.id = ctx.packet.id;
  out.port = ctx.packet.port;
  for (int unit : order) {
    std::vector<InstanceId>& insts = members[unit];
    // Stack elements go out in index order.
    std::sort(insts.begin(), insts.end(), [&](InstanceId a, InstanceId b) {
      return p.instances[a].stack_index < p.instances[b].stack_index;
    });
    for (InstanceId i : insts) {
      const HeaderType& type = p.type_of(i);
      const InstanceState& st = ctx.cfg.instances[i];
      for (size_t f = 0; f < type.fields.size(); ++f) {
        const Value& v = st.fields[f];
        if (v.is_undef()) {
          throw Stuck(StuckReason::kUndefInExpr,
                      "deparse: " + p.instances[i].name + "." + type.fields[f].name + " is @undef");
        }
        out.append_value(v);
      }
    }
  }
  ctx.cfg.last_deparse_order = order;

  Packet payload = packet_suffix(ctx.packet, ctx.offset);
  if (!payload.segments.empty() || payload.tail) ctx.hit(Site::kPipePayload);
  for (const PacketSegment& seg : payload.segments) {
    if (seg.symbolic) {
      out.append_value(seg.value);
    } else {
      out.append_bits(seg.bits);
    }
  }
  out.tail = payload.tail;
  return out;
}

void truncate_packet(Packet& p, int64_t bytes, const std::string& site) {
  size_t keep = static_cast<size_t>(bytes) * 8;
  std::vector<PacketSegment> segs;
  size_t pos = 0;
  for (PacketSegment& seg : p.segments) {
    if (pos >= keep) break;
    size_t w = seg.width();
    if (pos + w <= keep) {
      segs.push_back(std::move(seg));
    } else if (!seg.symbolic) {
      seg.bits = seg.bits.slice(0, keep - pos);
      segs.push_back(std::move(seg));
    } else {
      int len = static_cast<int>(keep - pos);
      const Value& v = seg.value;
      int lo = v.width() - len;  // keep the top `len` bits
      if (lo < v.slice_width() && lo + len > v.slice_width()) {
        throw Stuck(StuckReason::kSymbolicUnsupported, site + ": truncation inside a symbolic value");
      }
      PacketSegment cut;
      cut.symbolic = lo < v.slice_width();
      if (cut.symbolic) {
        cut.value = Value::symbolic(v.atom(), v.slice_lo() + lo, len, len);
      } else {
        cut.bits.append(0, len);
      }
      segs.push_back(std::move(cut));
    }
    pos += w;
  }
  if (p.tail && keep > pos) {
    SymbolicTail& t = *p.tail;
    if (t.length_atom >= 0) {
      throw Stuck(StuckReason::kSymbolicUnsupported, site + ": truncation of a symbolic-length packet");
    }
    size_t avail = static_cast<size_t>(t.fixed_bytes) * 8 - t.from_bit;
    if (keep - pos < avail) t.fixed_bytes = static_cast<int>((t.from_bit + keep - pos + 7) / 8);
  } else {
    p.tail.reset();
  }
  p.segments = std::move(segs);
}

bool process_packet(Config& cfg, const TargetProfile& profile, Chooser& chooser,
                    PathCondition& pc, Coverage* coverage, const EngineOptions& options) {
  if (cfg.status == NodeStatus::kStuck || cfg.in.empty()) return false;
  ExecContext ctx(cfg, profile, chooser, pc, coverage, options);
  ctx.packet = std::move(cfg.in.front());
  cfg.in.pop_front();
  ++cfg.packets_processed;
  cfg.status = NodeStatus::kRunning;
  try {
    run_packet(ctx);
  } catch (const Stuck& s) {
    cfg.status = NodeStatus::kStuck;
    cfg.stuck = StuckInfo{s.reason(), s.site(), ctx.packet.id};
    return true;
  }
  cfg.status = cfg.in.empty() ? NodeStatus::kAwaitingInput : NodeStatus::kRunning;
  return true;
}

int64_t run_node(Config& cfg, const TargetProfile& profile, int64_t max_packets,
                 Coverage* coverage, const EngineOptions& options) {
  CanonicalChooser chooser;
  PathCondition pc;
  int64_t passes = 0;
  while (passes < max_packets && process_packet(cfg, profile, chooser, pc, coverage, options)) {
    ++passes;
  }
  if (cfg.status != NodeStatus::kStuck && cfg.in.empty()) cfg.status = NodeStatus::kAwaitingInput;
  return passes;
}

}  // namespace p4sem
