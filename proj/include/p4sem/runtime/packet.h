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


#ifndef P4SEM_RUNTIME_PACKET_H_
#define P4SEM_RUNTIME_PACKET_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "p4sem/common/bits.h"
#include "p4sem/values/value.h"

namespace p4sem {

// Validity and field values of one header instance.
struct InstanceState {
  bool valid = false;
  std::vector<Value> fields;
  friend bool operator==(const InstanceState&, const InstanceState&) = default;
};

// A run of packet bits: concrete, or one symbolic value.
struct PacketSegment {
  bool symbolic = false;
  BitString bits;  // concrete
  Value value;     // symbolic; its width is the segment width

  size_t width() const { return symbolic ? static_cast<size_t>(value.width()) : bits.size(); }
  friend bool operator==(const PacketSegment&, const PacketSegment&) = default;
};

// Packet bytes drawn from a template, up to a (possibly symbolic) total
// length. Fresh symbolic inputs consist of a tail only; `designations` names
// the header fields ("ethernet", "ipv4.ttl") that become atoms when parsed.
struct SymbolicTail {
  AtomId length_atom = -1;  // total length in bytes; -1: use fixed_bytes
  int fixed_bytes = 0;
  size_t from_bit = 0;      // first template bit of the tail
  std::shared_ptr<const std::vector<uint8_t>> base;
  std::shared_ptr<const std::set<std::string>> designations;

  friend bool operator==(const SymbolicTail& a, const SymbolicTail& b) {
    return a.length_atom == b.length_atom && a.fixed_bytes == b.fixed_bytes &&
           a.from_bit == b.from_bit && *a.base == *b.base &&
           (a.designations == nullptr) == (b.designations == nullptr) &&
           (a.designations == nullptr || *a.designations == *b.designations);
  }
};

// Metadata values carried across resubmit / recirculate / clone.
struct CarriedField {
  int instance = -1;
  int field = -1;
  Value value;
  friend bool operator==(const CarriedField&, const CarriedField&) = default;
};

// Parsed representation carried by a skip-ingress (clone-to-egress) packet.
struct CarriedState {
  std::vector<InstanceState> instances;
  int egress_port = 0;
  size_t payload_offset = 0;  // bits of the packet consumed by the parser
};

enum InstanceType {
  kInstanceNormal = 0,
  kInstanceIngressClone = 1,
  kInstanceEgressClone = 2,
  kInstanceRecirculated = 4,
  kInstanceResubmitted = 6,
};

struct Packet {
  uint64_t id = 0;
  int port = 0;
  std::vector<PacketSegment> segments;
  std::optional<SymbolicTail> tail;

  bool skip_ingress = false;
  int instance_type = kInstanceNormal;
  std::vector<CarriedField> carried_fields;
  std::shared_ptr<const CarriedState> carried;

  static Packet from_bytes(int port, std::vector<uint8_t> bytes);

  void append_bits(const BitString& bits);
  void append_value(const Value& v);  // concrete or symbolic; width > 0
  size_t fixed_bits() const;
  bool is_concrete() const;
  // Whole-byte contents; requires is_concrete().
  std::vector<uint8_t> bytes() const;
  std::string to_string() const;
};

// Equality of packet contents and port, ignoring ids and flags.
bool same_content(const Packet& a, const Packet& b);

}  // namespace p4sem

#endif  // P4SEM_RUNTIME_PACKET_H_
