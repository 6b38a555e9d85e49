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


#ifndef P4SEM_ENGINE_PATH_CONDITION_H_
#define P4SEM_ENGINE_PATH_CONDITION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "p4sem/values/constraint.h"

namespace p4sem {

// A symbolic input: a header field of the original packet, or its length.
struct AtomInfo {
  std::string name;     // "ethernet.etherType", "packet.length"
  int width = 0;
  int64_t origin_bit = -1;  // position in the original packet; -1 for the length
  bool is_length = false;
  uint64_t packet_id = 0;   // input packet the atom was read from
  friend bool operator==(const AtomInfo&, const AtomInfo&) = default;
};

// Constraints accumulated along one execution path.
class PathCondition {
 public:
  AtomId new_atom(AtomInfo info);
  // An existing atom with the same packet, origin and width, or -1.
  AtomId find_atom(const AtomInfo& info) const;
  const std::vector<AtomInfo>& atoms() const { return atoms_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  bool empty() const { return atoms_.empty(); }

  // Satisfiability of the current constraints plus `extra` (all on one atom).
  SatStatus check_with(const Constraint& extra) const;
  void add(const Constraint& c) { constraints_.push_back(c); }

  // Whole-path query with a witness for every atom.
  SatResult solve() const;
  // True when every model of this path also satisfies `c`.
  bool entails(const Constraint& c) const;

  // Records that some decision along the path was taken on an `unknown`.
  void mark_unknown() { unknown_ = true; }
  bool unknown() const { return unknown_; }

  std::string to_string() const;
  void serialize(std::string* out) const;
  friend bool operator==(const PathCondition&, const PathCondition&) = default;

 private:
  std::vector<AtomInfo> atoms_;
  std::vector<Constraint> constraints_;
  bool unknown_ = false;
};

}  // namespace p4sem

#endif  // P4SEM_ENGINE_PATH_CONDITION_H_
