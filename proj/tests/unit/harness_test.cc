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


#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "p4sem/common/error.h"
#include "p4sem/engine/coverage.h"
#include "p4sem/harness/stf.h"
#include "test_util.h"

namespace p4sem {
namespace {

using ::p4sem::testing::corpus_path;
using ::p4sem::testing::kRewriteSource;

TEST(ParseStf, StatementKinds) {
  std::vector<StfStatement> s = parse_stf(
      "# comment\n"
      "profile zero-registers\n"
      "add t 1 h1.f1:1 => b()\n"
      "packet 3 01 02\n"
      "expect 2 01**\n"
      "no_packet\n"
      "stuck UNDEFINED_EGRESS\n");
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s[0].kind, StfStatement::Kind::kProfile);
  EXPECT_EQ(s[0].text, "zero-registers");
  EXPECT_EQ(s[1].kind, StfStatement::Kind::kControl);
  EXPECT_EQ(s[2].kind, StfStatement::Kind::kPacket);
  EXPECT_EQ(s[2].port, 3);
  EXPECT_EQ(s[2].bytes, (std::vector<uint8_t>{0x01, 0x02}));
  EXPECT_EQ(s[2].line, 4);
  EXPECT_EQ(s[3].kind, StfStatement::Kind::kExpect);
  EXPECT_EQ(s[4].kind, StfStatement::Kind::kNoPacket);
  EXPECT_EQ(s[5].kind, StfStatement::Kind::kStuck);
  EXPECT_EQ(s[5].text, "UNDEFINED_EGRESS");
}

TEST(ParseStf, RejectsMalformedLines) {
  EXPECT_THROW(parse_stf("packet x 01\n"), Error);
  EXPECT_THROW(parse_stf("packet 0 0g\n"), Error);
  EXPECT_THROW(parse_stf("add t 1 => b()\nprofile default\n"), Error);
  EXPECT_THROW(parse_stf("stuck NOT_A_REASON\n"), Error);
}

TEST(MatchHexPattern, WildcardNibbles) {
  std::vector<uint8_t> b{0xAB, 0xCD};
  EXPECT_TRUE(match_hex_pattern("abcd", b));
  EXPECT_TRUE(match_hex_pattern("a*c*", b));
  EXPECT_TRUE(match_hex_pattern("****", b));
  EXPECT_FALSE(match_hex_pattern("abce", b));
  EXPECT_FALSE(match_hex_pattern("abcd00", b));
  EXPECT_FALSE(match_hex_pattern("ab", b));
}

TEST(RunStf, PassesAndReportsMismatches) {
  Program p = load_program_source(kRewriteSource());
  const std::string setup = "add t 1 h1.f1:0xAA => a(0x42)\n";
  StfReport ok = run_stf(p, setup + "packet 0 AA00\nexpect 1 AA42\n");
  EXPECT_TRUE(ok.pass) << ok.to_string();
  ASSERT_EQ(ok.outputs.size(), 1u);
  StfReport port = run_stf(p, setup + "packet 0 AA00\nexpect 2 AA42\n");
  EXPECT_FALSE(port.pass);
  EXPECT_FALSE(port.failures.empty());
  StfReport bytes = run_stf(p, setup + "packet 0 AA00\nexpect 1 AA43\n");
  EXPECT_FALSE(bytes.pass);
  StfReport extra = run_stf(p, setup + "packet 0 AA00\nno_packet\n");
  EXPECT_FALSE(extra.pass);
}

TEST(RunStf, StuckExpectation) {
  Program p = load_program_source(kRewriteSource());
  StfReport r = run_stf(p, "packet 0 0100\nstuck UNDEFINED_EGRESS\n");
  EXPECT_TRUE(r.pass) << r.to_string();
  ASSERT_TRUE(r.stuck.has_value());
  StfReport wrong = run_stf(p, "packet 0 0100\nstuck INDEX_OOB\n");
  EXPECT_FALSE(wrong.pass);
  StfReport unexpected = run_stf(p, "packet 0 0100\n");
  EXPECT_FALSE(unexpected.pass);
}

class CorpusTest : public ::testing::TestWithParam<std::pair<std::string, std::string>> {};

TEST_P(CorpusTest, Passes) {
  StfReport r = run_stf_files(GetParam().first, GetParam().second);
  EXPECT_TRUE(r.pass) << GetParam().second << "\n" << r.to_string();
}

std::string corpus_test_name(
    const ::testing::TestParamInfo<std::pair<std::string, std::string>>& info) {
  std::string stem = info.param.second;
  stem = stem.substr(stem.rfind('/') + 1);
  stem = stem.substr(0, stem.size() - 4);
  for (char& c : stem) {
    if (!isalnum(static_cast<unsigned char>(c))) c = '_';
  }
  return stem;
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusTest,
                         ::testing::ValuesIn(discover_tests(P4SEM_CORPUS_DIR)),
                         corpus_test_name);

TEST(DiscoverTests, FindsWholeCorpus) {
  std::vector<std::pair<std::string, std::string>> tests = discover_tests(P4SEM_CORPUS_DIR);
  EXPECT_GE(tests.size(), 20u);
  std::set<std::string> programs;
  for (const auto& [p4, stf] : tests) programs.insert(p4);
  EXPECT_GE(programs.size(), 20u);
}

TEST(Coverage, EmptyRunCoversNothing) {
  CoverageReport r = coverage_run({});
  EXPECT_EQ(r.fraction(), 0.0);
  EXPECT_EQ(r.tests, 0);
}

TEST(Coverage, OneTestIsPartial) {
  CoverageReport r = coverage_run({{corpus_path("rewrite"), corpus_path("rewrite", ".stf")}});
  EXPECT_EQ(r.passed, 1);
  EXPECT_GT(r.fraction(), 0.0);
  EXPECT_LT(r.fraction(), 0.5);
}

TEST(Coverage, CorpusCoversNearlyEverything) {
  CoverageReport r = coverage_run(discover_tests(P4SEM_CORPUS_DIR));
  EXPECT_EQ(r.passed, r.tests);
  EXPECT_GE(r.fraction(), 0.95) << r.to_string(true);
}

}  // namespace
}  // namespace p4sem
