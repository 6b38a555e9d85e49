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


#include "p4sem/engine/exec.h"

namespace p4sem {

namespace {

constexpr int kLengthAtomWidth = 16;

[[noreturn]] void unsupported(const std::string& site, const std::string& what) {
  throw Stuck(StuckReason::kSymbolicUnsupported, site + ": " + what);
}

BigInt template_bits(const SymbolicTail& tail, size_t bit, int width) {
  BigInt v = 0;
  const std::vector<uint8_t>& base = *tail.base;
  for (int i = 0; i < width; ++i) {
    size_t b = bit + i;
    int x = b / 8 < base.size() ? (base[b / 8] >> (7 - b % 8)) & 1 : 0;
    v = (v << 1) | x;
  }
  return v;
}

// Bits [a, a + len) of a symbolic segment, whose value is a slice held in
// the low bits and zero-extended above.
Value symbolic_piece(const Value& v, size_t a, int len, const std::string& site) {
  int width = v.width();
  int lo = width - static_cast<int>(a) - len;  // value bit index of the piece's lsb
  int hi = lo + len;
  if (hi <= v.slice_width()) return Value::symbolic(v.atom(), v.slice_lo() + lo, len, len);
  if (lo >= v.slice_width()) return Value::concrete(len, 0);
  unsupported(site, "read straddles the extension of a symbolic value");
}

bool designated(const SymbolicTail& tail, const std::string& inst, const std::string& field) {
  if (!tail.designations || field.empty()) return false;
  const auto& d = *tail.designations;
  std::string base = inst.substr(0, inst.find('['));
  return d.count("*") || d.count(inst) || d.count(base) || d.count(inst + "." + field) ||
         d.count(base + "." + field);
}

}  // namespace

bool packet_has_bits(ExecContext& ctx, size_t end_bit, const std::string& site) {
  const Packet& p = ctx.packet;
  size_t fixed = p.fixed_bits();
  if (end_bit <= fixed) return true;
  if (!p.tail) return false;
  size_t need_bits = p.tail->from_bit + (end_bit - fixed);
  size_t need_bytes = (need_bits + 7) / 8;
  if (p.tail->length_atom < 0) return static_cast<size_t>(p.tail->fixed_bytes) >= need_bytes;
  Value len = Value::symbolic(p.tail->length_atom, 0, kLengthAtomWidth, kLengthAtomWidth);
  return match_range(ctx, len, BigInt(need_bytes), low_mask(kLengthAtomWidth), site);
}

Value read_packet(ExecContext& ctx, size_t offset, int width, const std::string& instance_name,
                  const std::string& field_name, const std::string& site) {
  if (width == 0) return Value::empty_varbit();
  const Packet& p = ctx.packet;
  std::vector<Value> pieces;
  size_t pos = 0;
  size_t end = offset + width;
  for (const PacketSegment& seg : p.segments) {
    size_t w = seg.width();
    size_t a = std::max(offset, pos);
    size_t b = std::min(end, pos + w);
    if (a < b) {
      int len = static_cast<int>(b - a);
      if (seg.symbolic) {
        pieces.push_back(symbolic_piece(seg.value, a - pos, len, site));
      } else {
        pieces.push_back(Value::concrete(len, seg.bits.read(a - pos, len)));
      }
    }
    pos += w;
  }
  if (end > pos) {
    const SymbolicTail& tail = *p.tail;
    size_t a = std::max(offset, pos);
    int len = static_cast<int>(end - a);
    size_t tbit = tail.from_bit + (a - pos);
    if (a == offset && designated(tail, instance_name, field_name)) {
      AtomInfo info;
      info.name = instance_name + "." + field_name;
      info.width = len;
      info.origin_bit = static_cast<int64_t>(tbit);
      info.packet_id = ctx.packet.id;
      // A re-parse of the same input bits (resubmit) reuses the atom.
      AtomId atom = ctx.pc.find_atom(info);
      if (atom < 0) atom = ctx.pc.new_atom(info);
      pieces.push_back(Value::symbolic(atom, 0, len, len));
    } else {
      pieces.push_back(Value::concrete(len, template_bits(tail, tbit, len)));
    }
  }
  if (pieces.size() == 1) return pieces[0];
  BigInt v = 0;
  for (const Value& piece : pieces) {
    if (piece.is_symbolic()) unsupported(site, "read mixes symbolic and concrete packet bits");
    v = (v << piece.width()) | piece.bits();
  }
  return Value::concrete(width, v);
}

Packet packet_suffix(const Packet& p, size_t offset) {
  Packet out = p;
  out.segments.clear();
  size_t pos = 0;
  for (const PacketSegment& seg : p.segments) {
    size_t w = seg.width();
    if (pos + w <= offset) {
      pos += w;
      continue;
    }
    if (pos >= offset) {
      out.segments.push_back(seg);
    } else {
      size_t skip = offset - pos;
      if (seg.symbolic) {
        out.append_value(symbolic_piece(seg.value, skip, static_cast<int>(w - skip), "payload"));
      } else {
        out.append_bits(seg.bits.slice(skip, w - skip));
      }
    }
    pos += w;
  }
  if (out.tail && offset > pos) {
    out.tail->from_bit += offset - pos;
  }
  return out;
}

Value packet_length_value(ExecContext& ctx) {
  const Packet& p = ctx.packet;
  size_t fixed = p.fixed_bits();
  if (!p.tail) return Value::concrete(32, fixed / 8);
  if (p.tail->length_atom < 0) {
    return Value::concrete(32, (fixed + p.tail->fixed_bytes * 8 - p.tail->from_bit) / 8);
  }
  if (fixed == p.tail->from_bit) {
    return Value::symbolic(p.tail->length_atom, 0, kLengthAtomWidth, 32);
  }
  return Value::undef();
}

}  // namespace p4sem
