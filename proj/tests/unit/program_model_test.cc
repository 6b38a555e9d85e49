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
#include <set>
#include <string>

#include "gtest/gtest.h"
#include "p4sem/common/error.h"
#include "p4sem/program/program.h"
#include "test_util.h"

namespace p4sem {
namespace {

using ::p4sem::testing::corpus_path;
using ::p4sem::testing::kRewriteSource;

ErrorCode load_error(const std::string& source) {
  try {
    load_program_source(source);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "program loaded:\n" << source;
  return ErrorCode::kInvalidArgument;
}

const std::string kHeader = R"(
header_type h_t { fields { f1 : 8; f2 : 8; } }
header h_t h;
parser start { extract(h); return ingress; }
)";

TEST(Elaborate, RewriteTables) {
  Program p = load_program_source(kRewriteSource());
  int t = p.table_id("t");
  ASSERT_GE(t, 0);
  const TableInfo& table = p.tables[t];
  ASSERT_EQ(table.reads.size(), 1u);
  EXPECT_EQ(table.reads[0].kind, MatchKind::kExact);
  EXPECT_EQ(table.reads[0].text, "h1.f1");
  EXPECT_EQ(table.reads[0].width, 8);
  ASSERT_EQ(table.actions.size(), 2u);
  EXPECT_EQ(p.actions[table.actions[0]].name, "a");
  EXPECT_EQ(p.actions[table.actions[1]].name, "b");
  EXPECT_EQ(p.actions[p.action_id("a")].params, std::vector<std::string>{"n"});
  EXPECT_GE(p.ingress, 0);
  EXPECT_EQ(p.egress, -1);
  EXPECT_EQ(p.instance_id("missing"), -1);
}

TEST(Elaborate, StandardMetadataIsImplicit) {
  Program p = load_program_source(kRewriteSource());
  ASSERT_GE(p.standard_metadata, 0);
  EXPECT_TRUE(p.instances[p.standard_metadata].metadata);
  FieldRef ref;
  EXPECT_TRUE(p.resolve_field("standard_metadata.egress_spec", &ref));
  EXPECT_FALSE(p.resolve_field("h1.f9", &ref));
}

TEST(Elaborate, StacksExpandToElements) {
  Program p = load_program_file(corpus_path("stacks"));
  int s = p.stack_id("mpls");
  ASSERT_GE(s, 0);
  ASSERT_EQ(p.stacks[s].elements.size(), 3u);
  EXPECT_EQ(p.instances[p.stacks[s].elements[2]].name, "mpls[2]");
}

TEST(Elaborate, RejectsStaticViolations) {
  EXPECT_EQ(load_error(kHeader + "control egress { }"), ErrorCode::kNoIngress);
  EXPECT_EQ(load_error(kHeader + "control ingress { apply(nope); }"),
            ErrorCode::kUnresolvedName);
  EXPECT_EQ(load_error(kHeader + "header h_t h;\ncontrol ingress { }"),
            ErrorCode::kDuplicateName);
  EXPECT_EQ(load_error(kHeader + "field_list l { h.f1; payload; }\ncontrol ingress { }"),
            ErrorCode::kPayloadUnsupported);
  EXPECT_EQ(load_error("header_type v_t { fields { a : *; b : 8; } length : 2; max_length : 4; }\n"
                       "header v_t v;\nparser start { extract(v); return ingress; }\n"
                       "control ingress { }"),
            ErrorCode::kVarbitMisplaced);
  EXPECT_EQ(load_error(kHeader +
                       "field_list l { h.f1; }\n"
                       "field_list_calculation c { input { l; } algorithm : identity; "
                       "output_width : 16; }\ncontrol ingress { }"),
            ErrorCode::kHashWidthMismatch);
}

TEST(Elaborate, RejectsFieldListCycles) {
  EXPECT_EQ(load_error(kHeader +
                       "field_list a { h.f1; b; }\nfield_list b { h.f2; a; }\n"
                       "control ingress { }"),
            ErrorCode::kFieldListCycle);
}

TEST(Elaborate, SaturatingFieldWarns) {
  Program p = load_program_source(
      "header_type h_t { fields { f : 8 (saturating); } }\nheader h_t h;\n"
      "parser start { extract(h); return ingress; }\ncontrol ingress { }");
  ASSERT_EQ(p.warnings.size(), 1u);
  EXPECT_NE(p.warnings[0].find("wrap-around"), std::string::npos);
}

TEST(FlattenFieldList, NestedListsExpandDepthFirst) {
  Program p = load_program_source(kHeader +
                                  "field_list inner { h.f2; }\n"
                                  "field_list outer { inner; h.f1; 0x7; }\n"
                                  "control ingress { }");
  std::vector<FlatItem> flat = flatten_field_list(p, "outer");
  ASSERT_EQ(flat.size(), 3u);
  EXPECT_EQ(p.field_text(flat[0].field), "h.f2");
  EXPECT_EQ(p.field_text(flat[1].field), "h.f1");
  EXPECT_TRUE(flat[2].is_const);
  EXPECT_EQ(flat[2].constant.bits(), 7);
}

TEST(FlattenFieldList, WholeInstanceExpandsToFields) {
  Program p = load_program_source(kHeader + "field_list all { h; }\ncontrol ingress { }");
  std::vector<FlatItem> flat = flatten_field_list(p, "all");
  ASSERT_EQ(flat.size(), 2u);
  EXPECT_EQ(p.field_text(flat[0].field), "h.f1");
  EXPECT_EQ(p.field_text(flat[1].field), "h.f2");
}

TEST(ParseGraph, StackSelfLoop) {
  Program p = load_program_file(corpus_path("stacks"));
  const ParseGraph& g = p.parse_graph;
  int mpls = p.state_id("parse_mpls");
  ASSERT_GE(mpls, 0);
  bool self_loop = false;
  for (const ParseEdge& e : g.edges) {
    if (e.from == mpls && e.to.kind == ParserTarget::Kind::kState && e.to.id == mpls) {
      self_loop = true;
      EXPECT_EQ(e.extracted, std::vector<std::string>{"mpls[next]"});
    }
  }
  EXPECT_TRUE(self_loop);
  EXPECT_EQ(g.states[g.start], "start");
}

TEST(ParseGraph, EdgesCoverEverySelectCase) {
  Program p = load_program_file(corpus_path("twodeparse"));
  int start = p.state_id("start");
  std::set<std::string> targets;
  for (const ParseEdge& e : p.parse_graph.edges) {
    if (e.from == start) targets.insert(e.to.name);
  }
  EXPECT_EQ(targets, (std::set<std::string>{"parse_x", "parse_y"}));
}

std::vector<std::vector<std::string>> named_orders(const DeparseOrders& d,
                                                   const std::vector<std::vector<int>>& orders) {
  std::vector<std::vector<std::string>> out;
  for (const auto& o : orders) {
    std::vector<std::string> names;
    for (int u : o) names.push_back(d.units[u]);
    out.push_back(names);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(DeparseOrders, SiblingBranchesLeaveTwoOrders) {
  Program p = load_program_file(corpus_path("twodeparse"));
  const DeparseOrders& d = p.deparse;
  std::vector<std::vector<std::string>> want{{"tag", "x", "y"}, {"tag", "y", "x"}};
  EXPECT_EQ(named_orders(d, d.all_orders()), want);
  // The canonical order follows declaration position.
  std::vector<int> all{0, 1, 2};
  EXPECT_EQ(named_orders(d, {d.canonical_order(all)}),
            (std::vector<std::vector<std::string>>{{"tag", "x", "y"}}));
}

TEST(DeparseOrders, ChainHasOneOrder) {
  Program p = load_program_source(
      "header_type h_t { fields { f : 8; } }\nheader h_t a;\nheader h_t b;\nheader h_t c;\n"
      "parser start { extract(c); return pb; }\n"
      "parser pb { extract(b); return pa; }\n"
      "parser pa { extract(a); return ingress; }\ncontrol ingress { }");
  std::vector<std::vector<std::string>> want{{"c", "b", "a"}};
  EXPECT_EQ(named_orders(p.deparse, p.deparse.all_orders()), want);
}

TEST(DeparseOrders, CyclicPrecedenceIsRejected) {
  EXPECT_EQ(load_error("header_type h_t { fields { f : 8; } }\nheader h_t a;\nheader h_t b;\n"
                       "parser start { return select(current(0, 8)) { 0 : pa; default : pb; } }\n"
                       "parser pa { extract(a); extract(b); return ingress; }\n"
                       "parser pb { extract(b); extract(a); return ingress; }\n"
                       "control ingress { }"),
            ErrorCode::kDeparseOrderConflict);
}

// Every order enumerated for a subset respects the precedence closure, and
// the enumeration finds all of them (checked against permutation filtering).
TEST(DeparseOrders, OrdersForMatchesPermutationFilter) {
  for (const char* name : {"twodeparse", "stacks", "basic_routing", "clones", "headers"}) {
    Program p = load_program_file(corpus_path(name));
    const DeparseOrders& d = p.deparse;
    std::vector<int> units(d.units.size());
    for (size_t i = 0; i < units.size(); ++i) units[i] = static_cast<int>(i);
    std::vector<std::vector<int>> want;
    std::vector<int> perm = units;
    do {
      bool ok = true;
      for (size_t i = 0; i < perm.size() && ok; ++i) {
        for (size_t j = i + 1; j < perm.size() && ok; ++j) ok = !d.before[perm[j]][perm[i]];
      }
      if (ok) want.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> got = d.orders_for(units);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, want) << name;
  }
}

}  // namespace
}  // namespace p4sem
