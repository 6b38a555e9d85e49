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


#include "p4sem/runtime/packet.h"

#include <stdexcept>

namespace p4sem {

Packet Packet::from_bytes(int port, std::vector<uint8_t> bytes) {
  Packet p;
  p.port = port;
  if (!bytes.empty()) {
    PacketSegment seg;
    seg.bits = BitString::from_bytes(std::move(bytes));
    p.segments.push_back(std::move(seg));
  }
  return p;
}

void Packet::append_bits(const BitString& bits) {
  if (bits.empty()) return;
  if (!segments.empty() && !segments.back().symbolic) {
    segments.back().bits.append_bits(bits);
    return;
  }
  PacketSegment seg;
  seg.bits = bits;
  segments.push_back(std::move(seg));
}

void Packet::append_value(const Value& v) {
  if (v.is_concrete()) {
    if (v.width() == 0) return;
    BitString b;
    b.append(v.bits(), v.width());
    append_bits(b);
    return;
  }
  if (!v.is_symbolic()) throw std::logic_error("cannot append an undefined value");
  PacketSegment seg;
  seg.symbolic = true;
  seg.value = v.with_signedness(false);
  segments.push_back(std::move(seg));
}

size_t Packet::fixed_bits() const {
  size_t n = 0;
  for (const PacketSegment& s : segments) n += s.width();
  return n;
}

bool Packet::is_concrete() const {
  if (tail) return false;
  for (const PacketSegment& s : segments) {
    if (s.symbolic) return false;
  }
  return true;
}

std::vector<uint8_t> Packet::bytes() const {
  if (!is_concrete()) throw std::logic_error("packet is not concrete");
  BitString all;
  for (const PacketSegment& s : segments) all.append_bits(s.bits);
  return all.bytes();
}

std::string Packet::to_string() const {
  std::string s = "port " + std::to_string(port) + " ";
  for (const PacketSegment& seg : segments) {
    if (seg.symbolic) {
      s += "{" + seg.value.to_string() + "}";
    } else {
      s += bytes_to_hex(seg.bits.bytes());
      if (seg.bits.size() % 8) s += "/" + std::to_string(seg.bits.size()) + "b";
    }
  }
  if (tail) {
    s += "{tail from bit " + std::to_string(tail->from_bit) + ", length ";
    s += tail->length_atom >= 0 ? "$" + std::to_string(tail->length_atom)
                                : std::to_string(tail->fixed_bytes);
    s += "}";
  }
  return s;
}

bool same_content(const Packet& a, const Packet& b) {
  return a.port == b.port && a.segments == b.segments && a.tail == b.tail;
}

}  // namespace p4sem
