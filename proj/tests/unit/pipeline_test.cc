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


#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "p4sem/common/stuck.h"
#include "p4sem/pipeline/pipeline.h"
#include "test_util.h"

namespace p4sem {
namespace {

using ::p4sem::testing::corpus_path;
using ::p4sem::testing::kRewriteSource;

struct Node {
  Node(Program p, const std::string& profile_spec, const std::string& script)
      : program(std::move(p)), profile(parse_profile(profile_spec)),
        cfg(new_config(program, profile)) {
    apply_control_script(cfg, script);
  }
  void inject(int port, std::vector<uint8_t> bytes) {
    Packet pkt = Packet::from_bytes(port, std::move(bytes));
    pkt.id = ++next_id;
    cfg.in.push_back(std::move(pkt));
  }
  Program program;
  TargetProfile profile;
  Config cfg;
  uint64_t next_id = 0;
};

std::string ctl(const std::string& name) { return read_text_file(corpus_path(name, ".ctl")); }

TEST(ProcessPacket, RewriteRewritesField) {
  Node n(load_program_source(kRewriteSource()), "", "add t 1 h1.f1:0xAA => a(0x42)\n");
  n.inject(0, {0xAA, 0x00});
  CanonicalChooser chooser;
  PathCondition pc;
  EXPECT_TRUE(process_packet(n.cfg, n.profile, chooser, pc));
  ASSERT_EQ(n.cfg.out.size(), 1u);
  EXPECT_EQ(n.cfg.out[0].port, 1);
  EXPECT_EQ(n.cfg.out[0].bytes(), (std::vector<uint8_t>{0xAA, 0x42}));
  EXPECT_EQ(n.cfg.status, NodeStatus::kAwaitingInput);
}

TEST(ProcessPacket, EmptyInputIsANoOp) {
  Node n(load_program_source(kRewriteSource()), "", "");
  CanonicalChooser chooser;
  PathCondition pc;
  Digest before = snapshot_hash(n.cfg);
  EXPECT_FALSE(process_packet(n.cfg, n.profile, chooser, pc));
  EXPECT_EQ(snapshot_hash(n.cfg), before);
}

TEST(ProcessPacket, PayloadFollowsHeaders) {
  Node n(load_program_source(kRewriteSource()), "", "add t 1 h1.f1:1 => b()\n");
  n.inject(3, {0x01, 0x02, 0xDE, 0xAD});
  run_node(n.cfg, n.profile, 10);
  ASSERT_EQ(n.cfg.out.size(), 1u);
  EXPECT_EQ(n.cfg.out[0].port, 2);
  EXPECT_EQ(n.cfg.out[0].bytes(), (std::vector<uint8_t>{0x01, 0x02, 0xDE, 0xAD}));
}

TEST(ProcessPacket, UndefinedEgressSticksOrDropsByProfile) {
  std::vector<uint8_t> arp{0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0x11, 0x11,
                           0x11, 0x11, 0x11, 0x11, 0x08, 0x06, 0xAB, 0xCD};
  Program p = load_program_file(corpus_path("basic_routing"));
  {
    Node n(p, "", ctl("basic_routing"));
    n.inject(1, arp);
    run_node(n.cfg, n.profile, 10);
    EXPECT_EQ(n.cfg.status, NodeStatus::kStuck);
    ASSERT_TRUE(n.cfg.stuck.has_value());
    EXPECT_EQ(n.cfg.stuck->reason, StuckReason::kUndefinedEgress);
    EXPECT_TRUE(n.cfg.out.empty());
  }
  {
    Node n(p, "drop-undef-egress", ctl("basic_routing"));
    n.inject(1, arp);
    run_node(n.cfg, n.profile, 10);
    EXPECT_EQ(n.cfg.status, NodeStatus::kAwaitingInput);
    EXPECT_TRUE(n.cfg.out.empty());
    EXPECT_EQ(n.cfg.packets_dropped, 1u);
  }
}

// IPv4 header checksum by direct summation, independent of the library.
uint16_t ip_checksum(const std::vector<uint8_t>& b, size_t off) {
  uint32_t sum = 0;
  for (size_t i = 0; i < 20; i += 2) {
    if (i == 10) continue;
    sum += (b[off + i] << 8) | b[off + i + 1];
  }
  while (sum >> 16) sum = (sum & 0xFFFF) + (sum >> 16);
  return static_cast<uint16_t>(~sum);
}

TEST(ProcessPacket, RoutingDecrementsTtlAndFixesChecksum) {
  Node n(load_program_file(corpus_path("basic_routing")), "", ctl("basic_routing"));
  std::vector<uint8_t> in;
  ASSERT_TRUE(parse_hex_bytes(
      "ffffffffffff111111111111080045000014000100004006b039c0a800010a000001dead", &in));
  ASSERT_EQ(ip_checksum(in, 14), 0xB039);
  n.inject(1, in);
  run_node(n.cfg, n.profile, 10);
  ASSERT_EQ(n.cfg.out.size(), 1u);
  std::vector<uint8_t> out = n.cfg.out[0].bytes();
  EXPECT_EQ(n.cfg.out[0].port, 2);
  EXPECT_EQ(out[22], 0x3F);
  EXPECT_EQ((out[24] << 8) | out[25], ip_checksum(out, 14));
}

TEST(ProcessPacket, LoadBalancerAlternatesPorts) {
  Node n(load_program_file(corpus_path("load_balancer")), "zero-registers", ctl("load_balancer"));
  for (int i = 0; i < 3; ++i) n.inject(0, {static_cast<uint8_t>(i)});
  run_node(n.cfg, n.profile, 10);
  ASSERT_EQ(n.cfg.out.size(), 3u);
  EXPECT_EQ(n.cfg.out[0].port, 0);
  EXPECT_EQ(n.cfg.out[1].port, 1);
  EXPECT_EQ(n.cfg.out[2].port, 0);
  int reg = n.program.stateful_id("reg");
  EXPECT_EQ(stateful_read(n.cfg, reg, 0).bits(), 1);
}

TEST(ProcessPacket, LoadBalancerSticksOnUndefinedRegister) {
  Node n(load_program_file(corpus_path("load_balancer")), "", ctl("load_balancer"));
  n.inject(0, {0x05});
  run_node(n.cfg, n.profile, 10);
  EXPECT_EQ(n.cfg.status, NodeStatus::kStuck);
  EXPECT_EQ(n.cfg.stuck->reason, StuckReason::kUndefInExpr);
}

TEST(ProcessPacket, RemovedHeaderIsNotEmitted) {
  Node n(load_program_source(R"(
header_type h_t { fields { a : 8; } }
header h_t outer;
header h_t inner;
parser start { extract(outer); extract(inner); return ingress; }
action strip() { remove_header(outer); modify_field(standard_metadata.egress_spec, 4); }
table t { actions { strip; } }
control ingress { apply(t); }
)"),
         "", "default t => strip()\n");
  n.inject(0, {0x01, 0x02, 0x03});
  run_node(n.cfg, n.profile, 10);
  ASSERT_EQ(n.cfg.out.size(), 1u);
  EXPECT_EQ(n.cfg.out[0].port, 4);
  EXPECT_EQ(n.cfg.out[0].bytes(), (std::vector<uint8_t>{0x02, 0x03}));
}

TEST(RunNode, RecirculationRespectsPacketBudget) {
  Node n(load_program_source(R"(
header_type h_t { fields { a : 8; } }
header h_t h;
parser start { extract(h); return ingress; }
action fwd() { modify_field(standard_metadata.egress_spec, 1); }
action again() { add_to_field(h.a, 1); recirculate(); }
table t { actions { fwd; } }
table e { actions { again; } }
control ingress { apply(t); }
control egress { apply(e); }
)"),
         "", "default t => fwd()\ndefault e => again()\n");
  n.inject(0, {0x00});
  EXPECT_EQ(run_node(n.cfg, n.profile, 5), 5);
  EXPECT_TRUE(n.cfg.out.empty());
  ASSERT_EQ(n.cfg.in.size(), 1u);
  EXPECT_EQ(n.cfg.in[0].instance_type, kInstanceRecirculated);
  EXPECT_EQ(n.cfg.in[0].bytes(), std::vector<uint8_t>{0x05});
}

TEST(RunNode, CorpusRecirculateTagsSecondPass) {
  Node n(load_program_file(corpus_path("recirculate")), "",
         "default fwd => forward()\ndefault loop_t => recirc()\ndefault tag_t => tag()\n");
  n.inject(0, {0x00, 0x00, 0xAB});
  EXPECT_EQ(run_node(n.cfg, n.profile, 10), 2);
  ASSERT_EQ(n.cfg.out.size(), 1u);
  EXPECT_EQ(n.cfg.out[0].bytes(), (std::vector<uint8_t>{0x07, 0x99, 0xAB}));
}

}  // namespace
}  // namespace p4sem
