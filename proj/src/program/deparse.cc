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
#include <functional>
#include <sstream>

#include "p4sem/common/error.h"
#include "p4sem/program/program.h"

namespace p4sem {

namespace {

std::string case_text(const RSelectCase& c, int key_width) {
  if (c.is_default) return "default";
  std::string s;
  for (size_t i = 0; i < c.values.size(); ++i) {
    if (i) s += ", ";
    s += to_hex(c.values[i].value);
    if (c.values[i].mask != low_mask(key_width)) s += " mask " + to_hex(c.values[i].mask);
  }
  return s;
}

}  // namespace

ParseGraph build_parse_graph(const Program& program) {
  ParseGraph g;
  g.start = program.start_state;
  for (size_t s = 0; s < program.parser_states.size(); ++s) {
    const ParserStateInfo& st = program.parser_states[s];
    g.states.push_back(st.name);
    std::vector<std::string> extracted;
    for (const RParserStmt& stmt : st.stmts) {
      if (stmt.extract) extracted.push_back(program.instance_text(stmt.target));
    }
    auto add = [&](const ParserTarget& to, std::string cond) {
      g.edges.push_back(ParseEdge{static_cast<int>(s), to, std::move(cond), extracted});
    };
    switch (st.return_kind) {
      case ast::ParserReturn::Kind::kDirect:
      case ast::ParserReturn::Kind::kParseError:
        add(st.target, "always");
        break;
      case ast::ParserReturn::Kind::kSelect:
        for (const RSelectCase& c : st.cases) add(c.target, case_text(c, st.key_width));
        break;
    }
  }
  return g;
}

DeparseOrders infer_deparse_orders(const Program& program, const ParseGraph& graph) {
  DeparseOrders d;
  d.unit_of_instance.assign(program.instances.size(), -1);
  std::vector<int> stack_unit(program.stacks.size(), -1);
  for (size_t i = 0; i < program.instances.size(); ++i) {
    const InstanceInfo& inst = program.instances[i];
    if (inst.metadata) continue;
    if (inst.stack >= 0) {
      if (stack_unit[inst.stack] < 0) {
        stack_unit[inst.stack] = static_cast<int>(d.units.size());
        d.units.push_back(program.stacks[inst.stack].name);
        d.unit_decl_pos.push_back(inst.decl_pos);
      }
      d.unit_of_instance[i] = stack_unit[inst.stack];
      continue;
    }
    d.unit_of_instance[i] = static_cast<int>(d.units.size());
    d.units.push_back(inst.name);
    d.unit_decl_pos.push_back(inst.decl_pos);
  }
  const size_t n = d.units.size();
  d.direct.assign(n, std::vector<bool>(n, false));

  // Extraction occurrences per state, as units.
  const size_t ns = graph.states.size();
  std::vector<std::vector<int>> occ(ns);
  for (size_t s = 0; s < ns; ++s) {
    for (const RParserStmt& stmt : program.parser_states[s].stmts) {
      if (!stmt.extract) continue;
      occ[s].push_back(stmt.target.kind == InstanceRef::Kind::kStatic
                           ? d.unit_of_instance[stmt.target.id]
                           : stack_unit[stmt.target.stack]);
    }
  }
  // reach[s][t]: t is reachable from s through at least one edge.
  std::vector<std::vector<bool>> reach(ns, std::vector<bool>(ns, false));
  for (const ParseEdge& e : graph.edges) {
    if (e.to.kind == ParserTarget::Kind::kState) reach[e.from][e.to.id] = true;
  }
  for (size_t k = 0; k < ns; ++k) {
    for (size_t i = 0; i < ns; ++i) {
      if (!reach[i][k]) continue;
      for (size_t j = 0; j < ns; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  std::vector<bool> live(ns, false);
  if (graph.start >= 0) {
    live[graph.start] = true;
    for (size_t t = 0; t < ns; ++t) {
      if (reach[graph.start][t]) live[t] = true;
    }
  }
  for (size_t s = 0; s < ns; ++s) {
    if (!live[s]) continue;
    for (size_t i = 0; i < occ[s].size(); ++i) {
      int a = occ[s][i];
      for (size_t j = i + 1; j < occ[s].size(); ++j) {
        if (occ[s][j] != a) d.direct[a][occ[s][j]] = true;
      }
      for (size_t t = 0; t < ns; ++t) {
        if (!reach[s][t]) continue;
        for (int b : occ[t]) {
          if (b != a) d.direct[a][b] = true;
        }
      }
    }
  }
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (d.direct[a][b] && d.direct[b][a]) {
        throw Error(ErrorCode::kDeparseOrderConflict,
                    "'" + d.units[a] + "' and '" + d.units[b] +
                        "' are extracted in both orders; no deparse order can be inferred");
      }
    }
  }
  d.before = d.direct;
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      if (!d.before[i][k]) continue;
      for (size_t j = 0; j < n; ++j) {
        if (d.before[k][j]) d.before[i][j] = true;
      }
    }
  }
  for (size_t a = 0; a < n; ++a) {
    if (d.before[a][a]) {
      throw Error(ErrorCode::kDeparseOrderConflict,
                  "cyclic extraction order through '" + d.units[a] + "'");
    }
  }
  return d;
}

std::vector<std::vector<int>> DeparseOrders::orders_for(const std::vector<int>& subset,
                                                        size_t limit) const {
  std::vector<int> units = subset;
  std::sort(units.begin(), units.end(), [this](int a, int b) {
    return std::pair(unit_decl_pos[a], a) < std::pair(unit_decl_pos[b], b);
  });
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<bool> placed(units.size(), false);
  std::function<void()> rec = [&]() {
    if (out.size() >= limit) return;
    if (current.size() == units.size()) {
      out.push_back(current);
      return;
    }
    for (size_t i = 0; i < units.size(); ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (size_t j = 0; j < units.size(); ++j) {
        if (!placed[j] && j != i && before[units[j]][units[i]]) {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      placed[i] = true;
      current.push_back(units[i]);
      rec();
      current.pop_back();
      placed[i] = false;
    }
  };
  rec();
  return out;
}

std::vector<std::vector<int>> DeparseOrders::all_orders(size_t limit) const {
  std::vector<int> all(units.size());
  for (size_t i = 0; i < units.size(); ++i) all[i] = static_cast<int>(i);
  return orders_for(all, limit);
}

std::vector<int> DeparseOrders::canonical_order(const std::vector<int>& subset) const {
  std::vector<std::vector<int>> first = orders_for(subset, 1);
  return first.empty() ? std::vector<int>{} : first.front();
}

std::string DeparseOrders::to_dot() const {
  std::ostringstream out;
  out << "digraph deparse {\n";
  for (const std::string& u : units) out << "  \"" << u << "\";\n";
  for (size_t a = 0; a < units.size(); ++a) {
    for (size_t b = 0; b < units.size(); ++b) {
      if (direct[a][b]) out << "  \"" << units[a] << "\" -> \"" << units[b] << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace p4sem
