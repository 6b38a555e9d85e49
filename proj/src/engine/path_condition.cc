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


#include "p4sem/engine/path_condition.h"

#include <map>

namespace p4sem {

AtomId PathCondition::new_atom(AtomInfo info) {
  atoms_.push_back(std::move(info));
  return static_cast<AtomId>(atoms_.size() - 1);
}

AtomId PathCondition::find_atom(const AtomInfo& info) const {
  for (size_t i = 0; i < atoms_.size(); ++i) {
    const AtomInfo& a = atoms_[i];
    if (a.packet_id == info.packet_id && a.origin_bit == info.origin_bit &&
        a.width == info.width && a.is_length == info.is_length) {
      return static_cast<AtomId>(i);
    }
  }
  return -1;
}

SatStatus PathCondition::check_with(const Constraint& extra) const {
  std::vector<Constraint> cs;
  for (const Constraint& c : constraints_) {
    if (c.atom == extra.atom) cs.push_back(c);
  }
  cs.push_back(extra);
  return atom_sat(extra.atom, atoms_[extra.atom].width, cs).status;
}

SatResult PathCondition::solve() const {
  std::map<AtomId, int> widths;
  for (size_t i = 0; i < atoms_.size(); ++i) widths[static_cast<AtomId>(i)] = atoms_[i].width;
  return constraint_sat(constraints_, widths);
}

bool PathCondition::entails(const Constraint& c) const {
  return check_with(c.negated()) == SatStatus::kUnsat;
}

std::string PathCondition::to_string() const {
  if (constraints_.empty()) return "true";
  std::string out;
  for (const Constraint& c : constraints_) {
    if (!out.empty()) out += " && ";
    out += c.to_string(atoms_[c.atom].name);
  }
  return out;
}

void PathCondition::serialize(std::string* out) const {
  for (const AtomInfo& a : atoms_) {
    *out += a.name + ":" + std::to_string(a.width) + ":" + std::to_string(a.origin_bit) + ":" +
            std::to_string(a.packet_id) + ";";
  }
  *out += "|";
  for (const Constraint& c : constraints_) {
    *out += std::to_string(c.atom) + "," + std::to_string(c.lo) + "," + std::to_string(c.width) +
            "," + std::to_string(static_cast<int>(c.relation)) + "," + c.a.str() + "," +
            c.b.str() + ";";
  }
  *out += unknown_ ? "?" : ".";
}

}  // namespace p4sem
