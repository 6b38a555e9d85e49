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


#include "p4sem/harness/stf.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <map>
#include <sstream>

#include "p4sem/common/error.h"
#include "p4sem/pipeline/pipeline.h"
#include "p4sem/runtime/control_script.h"

namespace p4sem {

namespace {

constexpr int64_t kQuiescenceBudget = 10000;

[[noreturn]] void stf_error(int line, const std::string& msg) {
  throw Error(ErrorCode::kStfParseError, "stf line " + std::to_string(line) + ": " + msg);
}

int parse_port(const std::string& text, int line) {
  BigInt v;
  if (!parse_integer(text, &v) || v < 0 || v > 65535) stf_error(line, "bad port '" + text + "'");
  return static_cast<int>(v);
}

std::string join_hex(const std::vector<std::string>& parts) {
  std::string s;
  for (const std::string& p : parts) s += p;
  return s;
}

}  // namespace

std::vector<StfStatement> parse_stf(std::string_view text) {
  std::vector<StfStatement> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    StfStatement s;
    s.line = line;
    const std::string& cmd = tok[0];
    if (cmd == "packet") {
      if (tok.size() < 2) stf_error(line, "expected: packet <port> <hex>");
      s.kind = StfStatement::Kind::kPacket;
      s.port = parse_port(tok[1], line);
      std::string hex = join_hex({tok.begin() + 2, tok.end()});
      if (!parse_hex_bytes(hex, &s.bytes)) stf_error(line, "bad packet bytes '" + hex + "'");
    } else if (cmd == "expect") {
      if (tok.size() < 2) stf_error(line, "expected: expect <port> <pattern>");
      s.kind = StfStatement::Kind::kExpect;
      s.port = parse_port(tok[1], line);
      s.text = join_hex({tok.begin() + 2, tok.end()});
      if (s.text.size() % 2 != 0) stf_error(line, "odd-length expect pattern");
      for (char c : s.text) {
        if (c != '*' && !std::isxdigit(static_cast<unsigned char>(c))) {
          stf_error(line, "bad character in expect pattern");
        }
      }
    } else if (cmd == "no_packet") {
      s.kind = StfStatement::Kind::kNoPacket;
    } else if (cmd == "profile") {
      if (tok.size() != 2) stf_error(line, "expected: profile <spec>");
      if (!out.empty()) stf_error(line, "profile must be the first statement");
      s.kind = StfStatement::Kind::kProfile;
      s.text = tok[1];
    } else if (cmd == "stuck") {
      StuckReason r;
      if (tok.size() != 2 || !parse_stuck_reason(tok[1], &r)) stf_error(line, "expected: stuck <REASON>");
      s.kind = StfStatement::Kind::kStuck;
      s.text = tok[1];
    } else {
      s.kind = StfStatement::Kind::kControl;
      s.text = raw;
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool match_hex_pattern(std::string_view pattern, const std::vector<uint8_t>& bytes) {
  std::string actual = bytes_to_hex(bytes);
  if (actual.size() != pattern.size()) return false;
  for (size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == '*') continue;
    if (std::tolower(static_cast<unsigned char>(pattern[i])) !=
        std::tolower(static_cast<unsigned char>(actual[i]))) {
      return false;
    }
  }
  return true;
}

std::string StfReport::to_string() const {
  std::string s = pass ? "PASS\n" : "FAIL\n";
  for (const std::string& f : failures) s += "  " + f + "\n";
  return s;
}

StfReport run_stf(const Program& program, std::string_view stf, const std::string& profile,
                  Coverage* coverage) {
  std::vector<StfStatement> script = parse_stf(stf);
  std::string profile_spec = profile;
  if (!script.empty() && script[0].kind == StfStatement::Kind::kProfile) profile_spec = script[0].text;
  TargetProfile prof = parse_profile(profile_spec);
  Config cfg = new_config(program, prof);

  StfReport report;
  std::map<int, std::vector<const StfStatement*>> expects;
  std::optional<std::string> expected_stuck;
  size_t outputs_before_last_packet = 0;
  uint64_t next_id = 0;
  for (const StfStatement& s : script) {
    switch (s.kind) {
      case StfStatement::Kind::kControl:
        if (!apply_control_line(cfg, s.text, s.line)) {
          stf_error(s.line, "unknown statement '" + s.text + "'");
        }
        break;
      case StfStatement::Kind::kProfile:
        break;
      case StfStatement::Kind::kPacket: {
        Packet p = Packet::from_bytes(s.port, s.bytes);
        p.id = ++next_id;
        outputs_before_last_packet = cfg.out.size();
        cfg.in.push_back(std::move(p));
        run_node(cfg, prof, kQuiescenceBudget, coverage);
        if (cfg.status != NodeStatus::kStuck && !cfg.in.empty()) {
          report.failures.push_back("line " + std::to_string(s.line) + ": no quiescence after " +
                                    std::to_string(kQuiescenceBudget) + " passes");
        }
        break;
      }
      case StfStatement::Kind::kExpect:
        expects[s.port].push_back(&s);
        break;
      case StfStatement::Kind::kNoPacket:
        if (cfg.out.size() != outputs_before_last_packet) {
          report.failures.push_back("line " + std::to_string(s.line) +
                                    ": expected no output, got " +
                                    std::to_string(cfg.out.size() - outputs_before_last_packet));
        }
        break;
      case StfStatement::Kind::kStuck:
        expected_stuck = s.text;
        break;
    }
  }

  report.outputs = cfg.out;
  report.stuck = cfg.stuck;
  if (cfg.stuck) {
    std::string reason(stuck_reason_name(cfg.stuck->reason));
    if (!expected_stuck || *expected_stuck != reason) {
      report.failures.push_back("stuck: " + reason + " at " + cfg.stuck->site);
    }
  } else if (expected_stuck) {
    report.failures.push_back("expected stuck " + *expected_stuck + ", node is not stuck");
  }

  std::map<int, std::vector<const Packet*>> actual;
  for (const Packet& p : cfg.out) actual[p.port].push_back(&p);
  for (const auto& [port, list] : expects) {
    const std::vector<const Packet*>& got = actual[port];
    for (size_t i = 0; i < list.size(); ++i) {
      if (i >= got.size()) {
        report.failures.push_back("port " + std::to_string(port) + " packet " + std::to_string(i) +
                                  ": missing, expected " + list[i]->text);
        continue;
      }
      std::vector<uint8_t> bytes =
          got[i]->is_concrete() ? got[i]->bytes() : std::vector<uint8_t>{};
      if (!match_hex_pattern(list[i]->text, bytes)) {
        report.failures.push_back("port " + std::to_string(port) + " packet " + std::to_string(i) +
                                  ": expected " + list[i]->text + ", got " + bytes_to_hex(bytes));
      }
    }
  }
  for (const auto& [port, got] : actual) {
    size_t want = expects.count(port) ? expects.at(port).size() : 0;
    for (size_t i = want; i < got.size(); ++i) {
      report.failures.push_back("port " + std::to_string(port) + " packet " + std::to_string(i) +
                                ": unexpected " + bytes_to_hex(got[i]->bytes()));
    }
  }
  report.pass = report.failures.empty();
  return report;
}

StfReport run_stf_files(const std::string& p4_path, const std::string& stf_path,
                        const std::string& profile, Coverage* coverage) {
  Program program = load_program_file(p4_path);
  return run_stf(program, read_text_file(stf_path), profile, coverage);
}

std::string CoverageReport::to_string(bool list_sites) const {
  char pct[32];
  std::snprintf(pct, sizeof(pct), "%.1f", 100.0 * fraction());
  std::string s = "tests: " + std::to_string(tests) + " (" + std::to_string(passed) + " passed)\n";
  for (const std::string& f : failed) s += "  failed: " + f + "\n";
  s += "semantic coverage: " + std::to_string(coverage.exercised()) + "/" +
       std::to_string(kSiteCount) + " rule sites (" + pct + "%)\n";
  if (list_sites) {
    for (int i = 0; i < kSiteCount; ++i) {
      Site site = static_cast<Site>(i);
      s += "  " + std::string(coverage.hits(site) ? "hit   " : "MISSED") + " " +
           std::string(site_name(site)) + " " + std::to_string(coverage.hits(site)) + "\n";
    }
  }
  return s;
}

CoverageReport coverage_run(const std::vector<std::pair<std::string, std::string>>& tests) {
  CoverageReport r;
  for (const auto& [p4, stf] : tests) {
    ++r.tests;
    Coverage c;
    std::string name = std::filesystem::path(stf).stem().string();
    try {
      StfReport rep = run_stf_files(p4, stf, "", &c);
      if (rep.pass) {
        ++r.passed;
      } else {
        r.failed.push_back(name + ": " + (rep.failures.empty() ? "" : rep.failures[0]));
      }
    } catch (const Error& e) {
      r.failed.push_back(name + ": " + e.what());
    }
    r.coverage.merge(c);
  }
  return r;
}

std::vector<std::pair<std::string, std::string>> discover_tests(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(ErrorCode::kFileNotFound, "no directory " + dir);
  std::vector<fs::path> dirs{fs::path(dir)};
  for (const fs::directory_entry& e : fs::directory_iterator(dir)) {
    if (e.is_directory()) dirs.push_back(e.path());
  }
  std::sort(dirs.begin(), dirs.end());
  std::vector<std::pair<std::string, std::string>> out;
  for (const fs::path& d : dirs) {
    std::vector<fs::path> p4s, stfs;
    for (const fs::directory_entry& e : fs::directory_iterator(d)) {
      if (!e.is_regular_file()) continue;
      if (e.path().extension() == ".p4") p4s.push_back(e.path());
      if (e.path().extension() == ".stf") stfs.push_back(e.path());
    }
    std::sort(stfs.begin(), stfs.end());
    for (const fs::path& stf : stfs) {
      fs::path same = stf;
      same.replace_extension(".p4");
      if (fs::exists(same)) {
        out.emplace_back(same.string(), stf.string());
      } else if (p4s.size() == 1) {
        out.emplace_back(p4s[0].string(), stf.string());
      }
    }
  }
  return out;
}

}  // namespace p4sem
