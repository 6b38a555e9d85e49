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


#include "p4sem/runtime/control_script.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "p4sem/common/error.h"

namespace p4sem {

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw Error(ErrorCode::kControlScriptError, "line " + std::to_string(line_no) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool parse_dotted(std::string_view text, char sep, int parts, int base, BigInt* out) {
  BigInt v = 0;
  int n = 0;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    std::string_view part = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    if (part.empty() || part.size() > (base == 10 ? 3u : 2u)) return false;
    unsigned x = 0;
    for (char c : part) {
      int d;
      if (c >= '0' && c <= '9') {
        d = c - '0';
      } else if (base == 16 && c >= 'a' && c <= 'f') {
        d = c - 'a' + 10;
      } else if (base == 16 && c >= 'A' && c <= 'F') {
        d = c - 'A' + 10;
      } else {
        return false;
      }
      x = x * base + d;
    }
    if (x > 255) return false;
    v = (v << 8) | x;
    ++n;
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (n != parts) return false;
  *out = v;
  return true;
}

Value arg_value(std::string_view text, int line_no) {
  bool neg = !text.empty() && text[0] == '-';
  BigInt v;
  if (!parse_script_number(neg ? text.substr(1) : text, &v)) {
    fail(line_no, "bad number '" + std::string(text) + "'");
  }
  int w = std::max(1, bit_length(v));
  if (neg) return Value::from_int(w + 1, -v, true);
  return Value::concrete(w, v);
}

BigInt number(std::string_view text, int line_no) {
  BigInt v;
  if (!parse_script_number(text, &v)) fail(line_no, "bad number '" + std::string(text) + "'");
  return v;
}

// "name(a, b)" possibly spread over several whitespace-separated words.
ActionCallSpec parse_action_call(const Program& p, std::string_view text, int line_no,
                                 const TableInfo& table) {
  text = trim(text);
  size_t open = text.find('(');
  std::string name(trim(text.substr(0, open)));
  ActionCallSpec call;
  call.action = p.action_id(name);
  if (call.action < 0) fail(line_no, "unknown action '" + name + "'");
  if (open != std::string_view::npos) {
    size_t close = text.rfind(')');
    if (close == std::string_view::npos || close < open || !trim(text.substr(close + 1)).empty()) {
      fail(line_no, "malformed action call");
    }
    std::string_view args = trim(text.substr(open + 1, close - open - 1));
    size_t start = 0;
    while (!args.empty()) {
      size_t comma = args.find(',', start);
      std::string_view a =
          trim(args.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (a.empty()) fail(line_no, "empty action argument");
      call.args.push_back(arg_value(a, line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  (void)table;
  return call;
}

MatchSpec parse_match(const TableReadInfo& read, std::string_view spec, int line_no) {
  MatchSpec m;
  m.kind = read.kind;
  if (spec.rfind("valid:", 0) == 0) {
    if (read.kind != MatchKind::kValid) fail(line_no, read.text + " is not a valid read");
    spec.remove_prefix(6);
  }
  switch (read.kind) {
    case MatchKind::kExact:
    case MatchKind::kValid:
      m.value = number(spec, line_no);
      break;
    case MatchKind::kTernary: {
      size_t amp = spec.find("&&&");
      if (amp == std::string_view::npos) {
        m.value = number(spec, line_no);
        m.mask = low_mask(read.width);
      } else {
        m.value = number(spec.substr(0, amp), line_no);
        m.mask = number(spec.substr(amp + 3), line_no);
      }
      break;
    }
    case MatchKind::kLpm: {
      size_t slash = spec.find('/');
      if (slash == std::string_view::npos) {
        m.value = number(spec, line_no);
        m.prefix_len = read.width;
      } else {
        m.value = number(spec.substr(0, slash), line_no);
        BigInt len = number(spec.substr(slash + 1), line_no);
        if (len > read.width) fail(line_no, "prefix longer than " + read.text);
        m.prefix_len = static_cast<int>(len);
      }
      break;
    }
    case MatchKind::kRange: {
      if (spec.size() < 2 || spec.front() != '[' || spec.back() != ']') {
        fail(line_no, "range match must be [lo,hi]");
      }
      std::string_view body = spec.substr(1, spec.size() - 2);
      size_t comma = body.find(',');
      if (comma == std::string_view::npos) fail(line_no, "range match must be [lo,hi]");
      m.value = number(trim(body.substr(0, comma)), line_no);
      m.hi = number(trim(body.substr(comma + 1)), line_no);
      break;
    }
  }
  return m;
}

void apply_add(Config& cfg, std::string_view rest, int line_no) {
  const Program& p = *cfg.program;
  size_t arrow = rest.find("=>");
  if (arrow == std::string_view::npos) fail(line_no, "missing '=>'");
  std::vector<std::string> words = split_ws(rest.substr(0, arrow));
  if (words.size() < 2) fail(line_no, "expected: add <table> <priority> <matches> => <action>");
  int table = p.table_id(words[0]);
  if (table < 0) fail(line_no, "unknown table '" + words[0] + "'");
  const TableInfo& t = p.tables[table];
  TableEntry entry;
  BigInt prio = number(words[1], line_no);
  if (prio > BigInt(INT64_MAX)) fail(line_no, "priority too large");
  entry.priority = static_cast<int64_t>(prio);
  entry.matches.resize(t.reads.size());
  std::vector<bool> seen(t.reads.size(), false);
  for (size_t i = 2; i < words.size(); ++i) {
    size_t colon = words[i].find(':');
    if (colon == std::string::npos) fail(line_no, "match '" + words[i] + "' lacks ':'");
    std::string key = words[i].substr(0, colon);
    size_t r = 0;
    while (r < t.reads.size() && (seen[r] || t.reads[r].text != key)) ++r;
    if (r == t.reads.size()) fail(line_no, "'" + key + "' is not a read of " + t.name);
    seen[r] = true;
    entry.matches[r] = parse_match(t.reads[r], std::string_view(words[i]).substr(colon + 1), line_no);
  }
  for (size_t r = 0; r < seen.size(); ++r) {
    if (!seen[r]) fail(line_no, "no match given for " + t.reads[r].text);
  }
  ActionCallSpec call = parse_action_call(p, rest.substr(arrow + 2), line_no, t);
  entry.action = call.action;
  entry.args = std::move(call.args);
  try {
    install_entry(cfg, table, std::move(entry));
  } catch (const Error& e) {
    fail(line_no, e.message());
  }
}

}  // namespace

bool parse_script_number(std::string_view text, BigInt* out) {
  if (text.empty()) return false;
  if (text.find('.') != std::string_view::npos) return parse_dotted(text, '.', 4, 10, out);
  if (text.find(':') != std::string_view::npos) return parse_dotted(text, ':', 6, 16, out);
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) return false;
  return parse_integer(text, out);
}

bool apply_control_line(Config& cfg, std::string_view line, int line_no) {
  size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  line = trim(line);
  if (line.empty()) return true;
  size_t sp = line.find_first_of(" \t");
  std::string_view cmd = line.substr(0, sp);
  std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
  const Program& p = *cfg.program;
  if (cmd == "add") {
    apply_add(cfg, rest, line_no);
  } else if (cmd == "default") {
    size_t arrow = rest.find("=>");
    if (arrow == std::string_view::npos) fail(line_no, "missing '=>'");
    std::string name(trim(rest.substr(0, arrow)));
    int table = p.table_id(name);
    if (table < 0) fail(line_no, "unknown table '" + name + "'");
    ActionCallSpec call = parse_action_call(p, rest.substr(arrow + 2), line_no, p.tables[table]);
    try {
      set_default_action(cfg, table, std::move(call));
    } catch (const Error& e) {
      fail(line_no, e.message());
    }
  } else if (cmd == "register") {
    size_t open = rest.find('[');
    size_t close = rest.find(']');
    size_t eq = rest.find('=');
    if (open == std::string_view::npos || close == std::string_view::npos ||
        eq == std::string_view::npos || close < open || eq < close) {
      fail(line_no, "expected: register <name>[<index>] = <value>");
    }
    std::string name(trim(rest.substr(0, open)));
    int reg = p.stateful_id(name);
    if (reg < 0 || p.statefuls[reg].kind != StatefulKind::kRegister) {
      fail(line_no, "unknown register '" + name + "'");
    }
    BigInt idx = number(trim(rest.substr(open + 1, close - open - 1)), line_no);
    Value v = arg_value(trim(rest.substr(eq + 1)), line_no);
    if (idx > BigInt(INT64_MAX)) fail(line_no, "register index out of range");
    try {
      register_write(cfg, reg, static_cast<int64_t>(idx), v, "control script");
    } catch (const Stuck&) {
      fail(line_no, "register index out of range");
    }
  } else if (cmd == "mirror") {
    std::vector<std::string> w = split_ws(rest);
    if (w.size() != 2) fail(line_no, "expected: mirror <session> <port>");
    BigInt session = number(w[0], line_no);
    BigInt port = number(w[1], line_no);
    if (session > BigInt(INT64_MAX) || port > 0xffff) fail(line_no, "mirror value out of range");
    cfg.mirror_sessions[static_cast<int64_t>(session)] = static_cast<int>(port);
  } else {
    return false;
  }
  return true;
}

void apply_control_script(Config& cfg, std::string_view script) {
  int line_no = 0;
  size_t start = 0;
  while (start <= script.size()) {
    size_t nl = script.find('\n', start);
    std::string_view line =
        script.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    if (!apply_control_line(cfg, line, line_no)) {
      fail(line_no, "unknown command '" + std::string(trim(line)) + "'");
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace p4sem
