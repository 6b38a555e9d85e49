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


#ifndef P4SEM_HARNESS_STF_H_
#define P4SEM_HARNESS_STF_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "p4sem/engine/coverage.h"
#include "p4sem/runtime/config.h"

namespace p4sem {

// Test script. Besides control-script commands (add, default, register,
// mirror), one statement per line:
//   profile <spec>          first statement only
//   packet <port> <hex>     inject and run to quiescence
//   expect <port> <pattern> next output on <port>; `*` matches any nibble
//   no_packet               the last injected packet produced no output
//   stuck <REASON>          the node is stuck with REASON at the end
struct StfStatement {
  enum class Kind { kControl, kProfile, kPacket, kExpect, kNoPacket, kStuck };
  Kind kind = Kind::kControl;
  int line = 0;
  std::string text;  // control line, profile spec, hex pattern or reason
  int port = 0;
  std::vector<uint8_t> bytes;  // packet
};

// Throws Error(kStfParseError).
std::vector<StfStatement> parse_stf(std::string_view text);

bool match_hex_pattern(std::string_view pattern, const std::vector<uint8_t>& bytes);

struct StfReport {
  bool pass = false;
  std::vector<std::string> failures;
  std::vector<Packet> outputs;  // emission order
  std::optional<StuckInfo> stuck;
  std::string to_string() const;
};

// `profile` applies unless the script names its own.
StfReport run_stf(const Program& program, std::string_view stf, const std::string& profile = "",
                  Coverage* coverage = nullptr);
StfReport run_stf_files(const std::string& p4_path, const std::string& stf_path,
                        const std::string& profile = "", Coverage* coverage = nullptr);

struct CoverageReport {
  Coverage coverage;
  int tests = 0;
  int passed = 0;
  std::vector<std::string> failed;  // test names
  double fraction() const { return coverage.fraction(); }
  std::string to_string(bool list_sites) const;
};

// (program, stf) pairs; each test's hits are merged.
CoverageReport coverage_run(const std::vector<std::pair<std::string, std::string>>& tests);
// Every <dir>/<name>/<stem>.stf paired with <stem>.p4 (or the directory's
// only .p4 file), in name order.
std::vector<std::pair<std::string, std::string>> discover_tests(const std::string& dir);

}  // namespace p4sem

#endif  // P4SEM_HARNESS_STF_H_
