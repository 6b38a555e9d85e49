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
#include "p4sem/parser_engine/parser_engine.h"
#include "test_util.h"

namespace p4sem {
namespace {

using ::p4sem::testing::corpus_path;
using ::p4sem::testing::Harness;
using ::p4sem::testing::kRewriteSource;

ParseOutcome parse(Harness& h, std::vector<uint8_t> bytes) {
  reset_instances(h.cfg);
  h.ctx.packet = Packet::from_bytes(0, std::move(bytes));
  h.ctx.offset = 0;
  return run_parser(h.ctx);
}

BigInt field(const Harness& h, const std::string& text) {
  FieldRef ref;
  EXPECT_TRUE(h.program.resolve_field(text, &ref)) << text;
  return h.cfg.instances[ref.instance.id].fields[ref.field].bits();
}

bool valid(const Harness& h, const std::string& inst) {
  return h.cfg.instances[h.program.instance_id(inst)].valid;
}

// Records every choice point offered to it and takes the canonical one.
class RecordingChooser : public Chooser {
 public:
  int choose(ChoiceKind kind, int n, std::string_view) override {
    seen.push_back({kind, n});
    return 0;
  }
  std::vector<std::pair<ChoiceKind, int>> seen;
};

TEST(RunParser, RewriteExtractsHeader) {
  Harness h(load_program_source(kRewriteSource()));
  ParseOutcome o = parse(h, {0x01, 0x02, 0xEE});
  EXPECT_FALSE(o.dropped);
  EXPECT_EQ(o.control, h.program.ingress);
  EXPECT_TRUE(valid(h, "h1"));
  EXPECT_EQ(field(h, "h1.f1"), 1);
  EXPECT_EQ(field(h, "h1.f2"), 2);
  EXPECT_EQ(h.ctx.offset, 16u);
}

TEST(RunParser, ShortPacketWithoutHandlerDrops) {
  Harness h(load_program_source(kRewriteSource()));
  ParseOutcome o = parse(h, {0x01});
  EXPECT_TRUE(o.dropped);
  EXPECT_EQ(o.exception, "p4_pe_out_of_packet");
  EXPECT_FALSE(valid(h, "h1"));
}

TEST(RunParser, SelectPicksBranch) {
  Harness h(load_program_file(corpus_path("twodeparse")));
  parse(h, {0x01, 0xAA});
  EXPECT_TRUE(valid(h, "x"));
  EXPECT_FALSE(valid(h, "y"));
  EXPECT_EQ(field(h, "x.a"), 0xAA);
  parse(h, {0x02, 0xBB});
  EXPECT_FALSE(valid(h, "x"));
  EXPECT_TRUE(valid(h, "y"));
}

TEST(RunParser, StackLoopFillsElementsInOrder) {
  Harness h(load_program_file(corpus_path("stacks")));
  // eth 8847; labels 1 and 2 (bos on the second).
  ParseOutcome o = parse(h, {0x88, 0x47, 0x00, 0x00, 0x10, 0x40, 0x00, 0x00, 0x21, 0x40});
  EXPECT_FALSE(o.dropped);
  EXPECT_EQ(field(h, "mpls[0].label"), 1);
  EXPECT_EQ(field(h, "mpls[1].label"), 2);
  EXPECT_FALSE(valid(h, "mpls[2]"));
}

TEST(RunParser, FullStackRaisesIndexOutOfBounds) {
  Harness h(load_program_file(corpus_path("stacks")));
  std::vector<uint8_t> pkt{0x88, 0x47};
  for (int i = 0; i < 4; ++i) {
    for (uint8_t b : {0x00, 0x00, 0x10, 0x40}) pkt.push_back(b);
  }
  ParseOutcome o = parse(h, pkt);
  EXPECT_TRUE(o.dropped);
  EXPECT_EQ(o.exception, "p4_pe_index_out_of_bounds");
}

TEST(RunParser, HandlersSetMetadataAndReachControl) {
  Harness h(load_program_file(corpus_path("exceptions")));
  int err_ctl = h.program.control_id("err_ctl");
  struct Case {
    std::vector<uint8_t> bytes;
    bool dropped;
    int control;
    int err;
  } cases[] = {
      {{0x01, 0x00}, false, h.program.ingress, 0},
      {{0x02, 0x00}, false, err_ctl, 2},
      {{0x03, 0x00}, false, err_ctl, 3},  // h2 is missing
      {{0x04, 0x00}, true, -1, 0},
      {{0x09, 0x00}, false, err_ctl, 7},  // no case matches
      {{0x06, 0x00, 0x01, 0x02}, false, h.program.ingress, 0},
  };
  for (const Case& c : cases) {
    ParseOutcome o = parse(h, c.bytes);
    EXPECT_EQ(o.dropped, c.dropped) << int(c.bytes[0]);
    if (!c.dropped) {
      EXPECT_EQ(o.control, c.control) << int(c.bytes[0]);
      EXPECT_EQ(field(h, "meta.err"), c.err) << int(c.bytes[0]);
    }
  }
}

TEST(RunParser, ParserStatusRecordsException) {
  Program p = load_program_file(corpus_path("exceptions"));
  EXPECT_EQ(parser_status_code(p, "p4_pe_out_of_packet"), 1);
  EXPECT_EQ(parser_status_code(p, "p4_pe_index_out_of_bounds"), 2);
  EXPECT_EQ(parser_status_code(p, "p4_pe_checksum"), 3);
  EXPECT_EQ(parser_status_code(p, "p4_pe_unhandled_select"), 4);
  EXPECT_GE(parser_status_code(p, "my_error"), 16);
  EXPECT_NE(parser_status_code(p, "my_error"), parser_status_code(p, "fatal"));
}

TEST(VerifyCalculatedFields, ChecksumPassAndFail) {
  Harness h(load_program_file(corpus_path("checksum")));
  ParseOutcome ok = parse(h, {0x04, 0x40, 0xFB, 0xBF});
  EXPECT_EQ(ok.control, h.program.ingress);
  ParseOutcome bad = parse(h, {0x04, 0x40, 0x00, 0x00});
  EXPECT_EQ(bad.control, h.program.control_id("err_ctl"));
  EXPECT_EQ(field(h, "meta.err"), 9);
  // Condition false: no verification at all.
  ParseOutcome skipped = parse(h, {0x06, 0x40, 0x00, 0x00});
  EXPECT_EQ(skipped.control, h.program.ingress);
}

TEST(VerifyCalculatedFields, SeveralBindingsOfferAnOrderChoice) {
  Program p = load_program_source(R"(
header_type h_t { fields { a : 8; b : 8; c1 : 16; c2 : 16; } }
header h_t h;
field_list la { h.a; }
field_list lb { h.b; }
field_list_calculation ca { input { la; } algorithm : csum16; output_width : 16; }
field_list_calculation cb { input { lb; } algorithm : csum16; output_width : 16; }
calculated_field h.c1 { verify ca; }
calculated_field h.c2 { verify cb; }
parser start { extract(h); return ingress; }
control ingress { }
)");
  TargetProfile profile;
  Config cfg = new_config(p, profile);
  RecordingChooser chooser;
  PathCondition pc;
  ExecContext ctx(cfg, profile, chooser, pc);
  ctx.packet = Packet::from_bytes(0, {0x01, 0x02, 0xFE, 0xFF, 0xFD, 0xFF});
  ParseOutcome o = run_parser(ctx);
  EXPECT_EQ(o.control, p.ingress);
  ASSERT_EQ(chooser.seen.size(), 1u);
  EXPECT_EQ(chooser.seen[0].first, ChoiceKind::kVerifyOrder);
  EXPECT_EQ(chooser.seen[0].second, 2);
}

TEST(RunParser, LoopBudgetSticks) {
  Program p = load_program_source(R"(
header_type h_t { fields { a : 8; } }
header h_t h;
parser start { return spin; }
parser spin { return start; }
control ingress { }
)");
  TargetProfile profile;
  Config cfg = new_config(p, profile);
  CanonicalChooser chooser;
  PathCondition pc;
  ExecContext ctx(cfg, profile, chooser, pc, nullptr, EngineOptions{100, 128});
  ctx.packet = Packet::from_bytes(0, {0x00});
  try {
    run_parser(ctx);
    FAIL() << "expected a stuck parser";
  } catch (const Stuck& s) {
    EXPECT_EQ(s.reason(), StuckReason::kParseLoopBudget);
  }
}

}  // namespace
}  // namespace p4sem
