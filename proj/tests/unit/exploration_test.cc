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


#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "p4sem/explore/search.h"
#include "p4sem/explore/symex.h"
#include "p4sem/pipeline/pipeline.h"
#include "test_util.h"

namespace p4sem {
namespace {

using ::p4sem::testing::corpus_path;
using ::p4sem::testing::kRewriteSource;

Config loaded(const Program& p, const TargetProfile& profile, const std::string& script) {
  Config cfg = new_config(p, profile);
  apply_control_script(cfg, script);
  return cfg;
}

void inject(Config& cfg, int port, std::vector<uint8_t> bytes) {
  Packet pkt = Packet::from_bytes(port, std::move(bytes));
  pkt.id = cfg.in.size() + 1;
  cfg.in.push_back(std::move(pkt));
}

SearchOptions focused(std::string_view spec) {
  SearchOptions o;
  o.focus = parse_focus(spec);
  return o;
}

TEST(Permutations, MatchStdNextPermutation) {
  for (int n = 0; n <= 6; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long index = 0;
    do {
      ASSERT_EQ(nth_permutation(n, index), perm) << n << " " << index;
      ++index;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(index, factorial(n));
  }
}

TEST(SiblingPrefixes, OneNonCanonicalStepEach) {
  std::vector<ReplayChooser::Branch> fresh{{ChoiceKind::kDeparseOrder, 3, "a"},
                                           {ChoiceKind::kDeparseOrder, 2, "b"}};
  std::vector<std::vector<int>> got = sibling_prefixes({}, fresh);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{0, 1}, {1}, {2}}));
  got = sibling_prefixes({4}, {{ChoiceKind::kVerifyOrder, 2, "c"}});
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{4, 1}}));
}

TEST(ReplayChooser, ReplaysPrefixThenRecordsFocusedBranches) {
  ReplayChooser c({2}, {ChoiceKind::kDeparseOrder});
  EXPECT_EQ(c.choose(ChoiceKind::kDeparseOrder, 3, "x"), 2);
  EXPECT_EQ(c.choose(ChoiceKind::kVerifyOrder, 3, "y"), 0);  // not focused
  EXPECT_EQ(c.choose(ChoiceKind::kDeparseOrder, 2, "z"), 0);
  ASSERT_EQ(c.fresh().size(), 1u);
  EXPECT_EQ(c.fresh()[0].site, "z");
  EXPECT_EQ(c.decisions(), (std::vector<int>{2, 0}));
}

TEST(ParseFocus, NamesAllAndNone) {
  EXPECT_EQ(parse_focus("none"), std::set<ChoiceKind>{});
  EXPECT_EQ(parse_focus("all").size(), static_cast<size_t>(kChoiceKindCount));
  EXPECT_EQ(parse_focus("deparse-order,verify-order"),
            (std::set<ChoiceKind>{ChoiceKind::kDeparseOrder, ChoiceKind::kVerifyOrder}));
}

TEST(Search, SiblingHeadersGiveTwoDeparseOrders) {
  Program p = load_program_file(corpus_path("twodeparse"));
  TargetProfile profile;
  Config cfg = loaded(p, profile, "default t => add_both()\n");
  inject(cfg, 0, {0x01, 0x11});
  SearchResult r = search(cfg, PathCondition{}, profile, focused("deparse-order"));
  EXPECT_EQ(distinct_outputs(r.terminals), 2u);
  std::set<std::string> outs;
  for (const NodeState& t : r.terminals) outs.insert(bytes_to_hex(t.cfg.out.at(0).bytes()));
  EXPECT_EQ(outs, (std::set<std::string>{"01aabb", "01bbaa"}));
  SearchResult canonical = search(cfg, PathCondition{}, profile, focused("none"));
  EXPECT_EQ(distinct_outputs(canonical.terminals), 1u);
}

TEST(Search, EmptyFocusEqualsRun) {
  Program p = load_program_source(kRewriteSource());
  TargetProfile profile;
  Config cfg = loaded(p, profile, "add t 1 h1.f1:0xAA => a(0x42)\ndefault t => b()\n");
  inject(cfg, 0, {0xAA, 0x00});
  inject(cfg, 0, {0x01, 0x02});
  Config run = cfg;
  run_node(run, profile, 100);
  SearchResult r = search(cfg, PathCondition{}, profile, focused("none"));
  ASSERT_EQ(r.terminals.size(), 1u);
  EXPECT_EQ(snapshot_hash(r.terminals[0].cfg), snapshot_hash(run));
  EXPECT_FALSE(r.partial);
}

TEST(Search, LoadBalancerSplitsTwoPackets) {
  Program p = load_program_file(corpus_path("load_balancer"));
  TargetProfile profile = parse_profile("zero-registers");
  Config cfg = loaded(p, profile, read_text_file(corpus_path("load_balancer", ".ctl")));
  inject(cfg, 0, {0x01});
  inject(cfg, 0, {0x02});
  SearchResult r = search(cfg, PathCondition{}, profile, focused("all"));
  EXPECT_TRUE(r.diagnostics.empty());
  ASSERT_FALSE(r.terminals.empty());
  for (const NodeState& t : r.terminals) {
    ASSERT_EQ(t.cfg.out.size(), 2u);
    EXPECT_EQ(t.cfg.out[0].port, 0);
    EXPECT_EQ(t.cfg.out[1].port, 1);
  }
}

TEST(Search, StatesCapMarksPartial) {
  Program p = load_program_file(corpus_path("twodeparse"));
  TargetProfile profile;
  Config cfg = loaded(p, profile, "default t => add_both()\n");
  for (int i = 0; i < 4; ++i) inject(cfg, 0, {0x01, 0x11});
  SearchOptions o = focused("deparse-order");
  o.budget.max_states = 3;
  EXPECT_TRUE(search(cfg, PathCondition{}, profile, o).partial);
}

TEST(Symex, RewriteOutputPortOneIffKeyMatches) {
  Program p = load_program_source(kRewriteSource());
  TargetProfile profile;
  const std::string script = "add t 1 h1.f1:0xAA => a(0x42)\ndefault t => b()\n";
  Config cfg = loaded(p, profile, script);
  SymbolicSpec spec = parse_symbolic_spec("h1;len=2");
  SymexResult r = symex_run(cfg, profile, spec, parse_predicate("output:1"));
  ASSERT_EQ(r.paths.size(), 1u);
  const SymexPath& path = r.paths[0];
  ASSERT_EQ(path.witness_inputs.size(), 1u);
  EXPECT_EQ(path.witness_inputs[0].bytes()[0], 0xAA);
  // Concrete sweep: the symbolic answer partitions the input space.
  for (int f1 = 0; f1 < 256; ++f1) {
    Config c = cfg;
    inject(c, 0, {static_cast<uint8_t>(f1), 0x00});
    run_node(c, profile, 10);
    ASSERT_EQ(c.out.size(), 1u);
    EXPECT_EQ(c.out[0].port == 1, f1 == 0xAA) << f1;
  }
}

TEST(Symex, UnsatisfiablePredicateHasNoPaths) {
  Program p = load_program_source(kRewriteSource());
  TargetProfile profile;
  Config cfg = loaded(p, profile, "add t 1 h1.f1:0xAA => a(0x42)\ndefault t => b()\n");
  SymexResult r = symex_run(cfg, profile, parse_symbolic_spec("h1;len=2"),
                            parse_predicate("output:7"));
  EXPECT_TRUE(r.paths.empty());
  EXPECT_TRUE(r.unknown.empty());
}

TEST(Symex, RoutingWitnessReproducesUndefinedEgress) {
  Program p = load_program_file(corpus_path("basic_routing"));
  TargetProfile profile;
  Config cfg = loaded(p, profile, read_text_file(corpus_path("basic_routing", ".ctl")));
  SymbolicSpec spec = parse_symbolic_spec("ethernet;port=1");
  SymexResult r = symex_run(cfg, profile, spec, parse_predicate("stuck:UNDEFINED_EGRESS"));
  ASSERT_FALSE(r.paths.empty());
  for (const SymexPath& path : r.paths) {
    ASSERT_EQ(path.witness_inputs.size(), 1u);
    Config replay = cfg;
    replay.in.push_back(path.witness_inputs[0]);
    run_node(replay, profile, 10);
    ASSERT_TRUE(replay.stuck.has_value());
    EXPECT_EQ(replay.stuck->reason, StuckReason::kUndefinedEgress);
  }
}

TEST(Diagnostics, JsonRecordsParse) {
  Program p = load_program_file(corpus_path("basic_routing"));
  TargetProfile profile;
  Config cfg = loaded(p, profile, read_text_file(corpus_path("basic_routing", ".ctl")));
  std::vector<uint8_t> arp;
  ASSERT_TRUE(parse_hex_bytes("ffffffffffff1111111111110806abcd", &arp));
  inject(cfg, 1, arp);
  SearchResult r = search(cfg, PathCondition{}, profile, focused("none"));
  ASSERT_EQ(r.diagnostics.size(), 1u);
  nlohmann::json j = nlohmann::json::parse(diagnostics_json(r.diagnostics));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["reason"], "UNDEFINED_EGRESS");
  EXPECT_EQ(j[0]["sat"], "sat");
  EXPECT_EQ(j[0]["witness_inputs"][0]["bytes"], "ffffffffffff1111111111110806abcd");
  EXPECT_NE(diagnostics_text(r.diagnostics).find("STUCK UNDEFINED_EGRESS"), std::string::npos);
}

}  // namespace
}  // namespace p4sem
