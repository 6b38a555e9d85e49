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


#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "p4sem/common/stuck.h"
#include "p4sem/match_action/match_action.h"
#include "test_util.h"

namespace p4sem {
namespace {

using ::p4sem::testing::Harness;
using ::p4sem::testing::kRewriteSource;

void set(Harness& h, const std::string& text, int64_t v) {
  FieldRef ref;
  ASSERT_TRUE(h.program.resolve_field(text, &ref)) << text;
  add_header(h.cfg, ref.instance.id);
  set_field(h.cfg, ref.instance.id, ref.field, Value::from_int(64, v), "test");
}

Value get(const Harness& h, const std::string& text) {
  FieldRef ref;
  EXPECT_TRUE(h.program.resolve_field(text, &ref)) << text;
  return h.cfg.instances[ref.instance.id].fields[ref.field];
}

StuckReason stuck_reason(const std::function<void()>& f) {
  try {
    f();
  } catch (const Stuck& s) {
    return s.reason();
  }
  ADD_FAILURE() << "did not stick";
  return StuckReason::kSymbolicUnsupported;
}

TEST(ApplyTable, RewriteHitRunsEntryAction) {
  Harness h(load_program_source(kRewriteSource()));
  apply_control_script(h.cfg, "add t 1 h1.f1:0xAA => a(0x42)\n");
  set(h, "h1.f1", 0xAA);
  set(h, "h1.f2", 0);
  ApplyResult r = apply_table(h.ctx, h.program.table_id("t"), "t");
  EXPECT_TRUE(r.hit);
  EXPECT_EQ(r.action, h.program.action_id("a"));
  EXPECT_EQ(get(h, "h1.f2").bits(), 0x42);
  EXPECT_EQ(get(h, "standard_metadata.egress_spec").bits(), 1);
}

TEST(ApplyTable, MissWithoutDefaultDoesNothing) {
  Harness h(load_program_source(kRewriteSource()));
  apply_control_script(h.cfg, "add t 1 h1.f1:0xAA => a(0x42)\n");
  set(h, "h1.f1", 0xAB);
  set(h, "h1.f2", 7);
  ApplyResult r = apply_table(h.ctx, h.program.table_id("t"), "t");
  EXPECT_FALSE(r.hit);
  EXPECT_EQ(r.action, -1);
  EXPECT_EQ(get(h, "h1.f2").bits(), 7);
  apply_control_script(h.cfg, "default t => b()\n");
  r = apply_table(h.ctx, h.program.table_id("t"), "t");
  EXPECT_FALSE(r.hit);
  EXPECT_EQ(r.action, h.program.action_id("b"));
  EXPECT_EQ(get(h, "standard_metadata.egress_spec").bits(), 2);
}

TEST(ApplyTable, InvalidKeyHeaderSticks) {
  Harness h(load_program_source(kRewriteSource()));
  EXPECT_EQ(stuck_reason([&] { apply_table(h.ctx, h.program.table_id("t"), "t"); }),
            StuckReason::kReadInvalidHeader);
}

const char* kKinds = R"(
header_type k_t { fields { a : 8; b : 8; c : 8; d : 8; } }
header k_t k;
header k_t opt;
parser start { extract(k); return ingress; }
action setp(p) { modify_field(standard_metadata.egress_spec, p); }
table t {
  reads { k.a : exact; k.b : ternary; k.c : lpm; k.d : range; }
  actions { setp; }
}
table lp {
  reads { k.c : lpm; }
  actions { setp; }
}
table v {
  reads { opt : valid; }
  actions { setp; }
}
control ingress { apply(t); }
)";

TEST(ApplyTable, HigherPriorityWinsOverLongerPrefix) {
  Harness h(load_program_source(kKinds));
  apply_control_script(h.cfg, "add lp 8 k.c:0x80/1 => setp(1)\nadd lp 16 k.c:0x00/0 => setp(2)\n");
  set(h, "k.c", 0x81);
  apply_table(h.ctx, h.program.table_id("lp"), "lp");
  EXPECT_EQ(get(h, "standard_metadata.egress_spec").bits(), 2);
}

TEST(ApplyTable, ValidReadOnInvalidInstanceMisses) {
  Harness h(load_program_source(kKinds));
  apply_control_script(h.cfg, "add v 1 opt:1 => setp(3)\n");
  ApplyResult r = apply_table(h.ctx, h.program.table_id("v"), "v");
  EXPECT_FALSE(r.hit);
  add_header(h.cfg, h.program.instance_id("opt"));
  r = apply_table(h.ctx, h.program.table_id("v"), "v");
  EXPECT_TRUE(r.hit);
}

struct OracleEntry {
  int prio;
  int a;
  int b, bmask;
  int c, clen;
  int dlo, dhi;
  int port;
};

bool oracle_match(const OracleEntry& e, int a, int b, int c, int d) {
  int cmask = e.clen == 0 ? 0 : (0xFF << (8 - e.clen)) & 0xFF;
  return a == e.a && (b & e.bmask) == (e.b & e.bmask) && (c & cmask) == (e.c & cmask) &&
         e.dlo <= d && d <= e.dhi;
}

// Highest-priority matching entry, by linear scan.
int oracle_port(const std::vector<OracleEntry>& entries, int a, int b, int c, int d) {
  const OracleEntry* best = nullptr;
  for (const OracleEntry& e : entries) {
    if (oracle_match(e, a, b, c, d) && (best == nullptr || e.prio > best->prio)) best = &e;
  }
  return best == nullptr ? -1 : best->port;
}

TEST(ApplyTable, AgreesWithLinearScanOnRandomTables) {
  std::mt19937 rng(11);
  auto small = [&](int n) { return static_cast<int>(rng() % n); };
  for (int trial = 0; trial < 100; ++trial) {
    Harness h(load_program_source(kKinds));
    std::vector<OracleEntry> entries;
    std::string script;
    std::vector<int> prios{1, 2, 3, 4, 5, 6, 7, 8};
    std::shuffle(prios.begin(), prios.end(), rng);
    int n = 1 + small(8);
    for (int i = 0; i < n; ++i) {
      int lo = small(4);
      OracleEntry e{prios[i], small(4), small(4), small(4), small(4), small(9), lo, lo + small(4), 10 + i};
      entries.push_back(e);
      script += "add t " + std::to_string(e.prio) + " k.a:" + std::to_string(e.a) +
                " k.b:" + std::to_string(e.b) + "&&&" + std::to_string(e.bmask) +
                " k.c:" + std::to_string(e.c) + "/" + std::to_string(e.clen) + " k.d:[" +
                std::to_string(e.dlo) + "," + std::to_string(e.dhi) + "] => setp(" +
                std::to_string(e.port) + ")\n";
    }
    apply_control_script(h.cfg, script);
    for (int probe = 0; probe < 50; ++probe) {
      int a = small(4), b = small(4), c = small(256), d = small(8);
      set(h, "k.a", a);
      set(h, "k.b", b);
      set(h, "k.c", c);
      set(h, "k.d", d);
      set(h, "standard_metadata.egress_spec", 0);
      ApplyResult r = apply_table(h.ctx, h.program.table_id("t"), "t");
      int want = oracle_port(entries, a, b, c, d);
      ASSERT_EQ(r.hit, want >= 0) << script << a << " " << b << " " << c << " " << d;
      if (want >= 0) ASSERT_EQ(get(h, "standard_metadata.egress_spec").bits(), want) << script;
    }
  }
}

TEST(ExecAction, CompoundActionsRunInOrder) {
  Harness h(load_program_source(R"(
header_type h_t { fields { x : 8; } }
header h_t h;
parser start { extract(h); return ingress; }
action inner(v) { modify_field(h.x, v); add_to_field(h.x, 1); }
action outer() { inner(5); add_to_field(h.x, 10); }
action loop() { loop(); }
control ingress { }
)"));
  set(h, "h.x", 0);
  exec_action(h.ctx, h.program.action_id("outer"), {}, "test");
  EXPECT_EQ(get(h, "h.x").bits(), 16);
  EXPECT_EQ(stuck_reason([&] { exec_action(h.ctx, h.program.action_id("loop"), {}, "test"); }),
            StuckReason::kCallDepth);
}

const char* kExtern = R"(
header_type h_t { fields { x : 8; } }
header h_t h;
parser start { extract(h); return ingress; }
action run_ext() { my_extern(h.x, 3); }
control ingress { }
)";

TEST(ExecAction, ExternDispatchesToProfileHook) {
  Harness h(load_program_source(kExtern));
  std::vector<Value> seen;
  h.profile.primitives["my_extern"] = [&](Config&, std::span<const Value> args) {
    seen.assign(args.begin(), args.end());
  };
  set(h, "h.x", 9);
  exec_action(h.ctx, h.program.action_id("run_ext"), {}, "test");
  ASSERT_EQ(seen.size(), 2u);
  EXPECT_EQ(seen[0].bits(), 9);
  EXPECT_EQ(seen[1].bits(), 3);
}

TEST(ExecAction, ExternWithoutHookSticks) {
  Harness h(load_program_source(kExtern));
  set(h, "h.x", 9);
  EXPECT_EQ(stuck_reason([&] { exec_action(h.ctx, h.program.action_id("run_ext"), {}, "test"); }),
            StuckReason::kUnknownPrimitive);
}

TEST(ExecAction, DigestAndCloneAreRecorded) {
  Harness h(load_program_source(R"(
header_type h_t { fields { x : 8; } }
header h_t h;
field_list fl { h.x; }
parser start { extract(h); return ingress; }
action report() {
  generate_digest(7, fl);
  clone_ingress_pkt_to_egress(10);
}
control ingress { }
)"));
  set(h, "h.x", 0x55);
  exec_action(h.ctx, h.program.action_id("report"), {}, "test");
  ASSERT_EQ(h.cfg.digests.size(), 1u);
  EXPECT_EQ(h.cfg.digests[0].receiver, 7);
  ASSERT_EQ(h.cfg.digests[0].values.size(), 1u);
  EXPECT_EQ(h.cfg.digests[0].values[0].bits(), 0x55);
  ASSERT_EQ(h.ctx.clones.size(), 1u);
  EXPECT_EQ(h.ctx.clones[0].session, 10);
  EXPECT_EQ(h.ctx.clones[0].op, PrimitiveOp::kCloneI2E);
}

}  // namespace
}  // namespace p4sem
