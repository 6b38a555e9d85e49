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


#ifndef P4SEM_VALUES_CONSTRAINT_H_
#define P4SEM_VALUES_CONSTRAINT_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "p4sem/common/bigint.h"
#include "p4sem/values/value.h"

namespace p4sem {

// Unary relation on a slice atom[lo, lo + width) of a symbolic atom.
// The negated forms exist because a miss on a table entry or a failed select
// case has to be recorded as well as the hit.
enum class Relation {
  kEq,          // slice == a
  kNeq,         // slice != a
  kTernary,     // (slice & b) == (a & b)
  kNotTernary,  // (slice & b) != (a & b)
  kRange,       // a <= slice <= b
  kNotRange,    // slice < a || slice > b
};

struct Constraint {
  AtomId atom = -1;
  int lo = 0;
  int width = 0;
  Relation relation = Relation::kEq;
  BigInt a = 0;
  BigInt b = 0;

  static Constraint eq(AtomId atom, int width, BigInt v, int lo = 0);
  static Constraint neq(AtomId atom, int width, BigInt v, int lo = 0);
  static Constraint ternary(AtomId atom, int width, BigInt v, BigInt mask, int lo = 0);
  static Constraint range(AtomId atom, int width, BigInt lo_v, BigInt hi_v, int lo = 0);

  Constraint negated() const;
  // Evaluates against a full atom value.
  bool holds(const BigInt& atom_value) const;
  std::string to_string(const std::string& atom_name) const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

enum class SatStatus { kSat, kUnsat, kUnknown };

std::string_view sat_status_name(SatStatus s);

struct SatResult {
  SatStatus status = SatStatus::kUnknown;
  // Present for every atom in the query when status is kSat.
  std::map<AtomId, BigInt> witness;
};

// Atoms whose width is <= kEnumerationLimit are decided by exhaustive
// enumeration. Wider atoms are decided by a bounded search over bit prefixes
// with interval/mask pruning; when that search exceeds its node budget the
// answer is kUnknown.
inline constexpr int kEnumerationLimit = 16;

struct SolverOptions {
  long node_budget = 200000;
};

// `atom_widths[id]` gives the total width of atom `id`.
SatResult constraint_sat(std::span<const Constraint> constraints,
                         const std::map<AtomId, int>& atom_widths,
                         const SolverOptions& options = {});

// Single-atom query used by the symbolic engine; `constraints` must all refer
// to `atom`.
SatResult atom_sat(AtomId atom, int atom_width, std::span<const Constraint> constraints,
                   const SolverOptions& options = {});

}  // namespace p4sem

#endif  // P4SEM_VALUES_CONSTRAINT_H_
