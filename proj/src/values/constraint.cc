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


#include "p4sem/values/constraint.h"

#include <cstdint>
#include <stdexcept>

namespace p4sem {

Constraint Constraint::eq(AtomId atom, int width, BigInt v, int lo) {
  return {atom, lo, width, Relation::kEq, std::move(v), 0};
}

Constraint Constraint::neq(AtomId atom, int width, BigInt v, int lo) {
  return {atom, lo, width, Relation::kNeq, std::move(v), 0};
}

Constraint Constraint::ternary(AtomId atom, int width, BigInt v, BigInt mask, int lo) {
  return {atom, lo, width, Relation::kTernary, std::move(v), std::move(mask)};
}

Constraint Constraint::range(AtomId atom, int width, BigInt lo_v, BigInt hi_v, int lo) {
  return {atom, lo, width, Relation::kRange, std::move(lo_v), std::move(hi_v)};
}

Constraint Constraint::negated() const {
  Constraint c = *this;
  switch (relation) {
    case Relation::kEq: c.relation = Relation::kNeq; break;
    case Relation::kNeq: c.relation = Relation::kEq; break;
    case Relation::kTernary: c.relation = Relation::kNotTernary; break;
    case Relation::kNotTernary: c.relation = Relation::kTernary; break;
    case Relation::kRange: c.relation = Relation::kNotRange; break;
    case Relation::kNotRange: c.relation = Relation::kRange; break;
  }
  return c;
}

bool Constraint::holds(const BigInt& atom_value) const {
  BigInt s = (atom_value >> lo) & low_mask(width);
  switch (relation) {
    case Relation::kEq: return s == a;
    case Relation::kNeq: return s != a;
    case Relation::kTernary: return (s & b) == (a & b);
    case Relation::kNotTernary: return (s & b) != (a & b);
    case Relation::kRange: return a <= s && s <= b;
    case Relation::kNotRange: return s < a || s > b;
  }
  return false;
}

std::string Constraint::to_string(const std::string& atom_name) const {
  std::string lhs = atom_name;
  if (lo != 0 || width <= 0) {
    lhs += "[" + std::to_string(lo) + "+:" + std::to_string(width) + "]";
  }
  switch (relation) {
    case Relation::kEq: return lhs + " == " + to_hex(a);
    case Relation::kNeq: return lhs + " != " + to_hex(a);
    case Relation::kTernary: return lhs + " &&& " + to_hex(b) + " == " + to_hex(a & b);
    case Relation::kNotTernary: return lhs + " &&& " + to_hex(b) + " != " + to_hex(a & b);
    case Relation::kRange: return lhs + " in [" + to_hex(a) + ", " + to_hex(b) + "]";
    case Relation::kNotRange: return lhs + " not in [" + to_hex(a) + ", " + to_hex(b) + "]";
  }
  return lhs;
}

std::string_view sat_status_name(SatStatus s) {
  switch (s) {
    case SatStatus::kSat: return "sat";
    case SatStatus::kUnsat: return "unsat";
    case SatStatus::kUnknown: return "unknown";
  }
  return "?";
}

namespace {

struct FastConstraint {
  int lo;
  uint64_t mask;
  Relation relation;
  uint64_t a;
  uint64_t b;
};

bool fast_holds(const FastConstraint& c, uint64_t x) {
  uint64_t s = (x >> c.lo) & c.mask;
  switch (c.relation) {
    case Relation::kEq: return s == c.a;
    case Relation::kNeq: return s != c.a;
    case Relation::kTernary: return (s & c.b) == (c.a & c.b);
    case Relation::kNotTernary: return (s & c.b) != (c.a & c.b);
    case Relation::kRange: return c.a <= s && s <= c.b;
    case Relation::kNotRange: return s < c.a || s > c.b;
  }
  return false;
}

// Saturates constants wider than the slice so the 64-bit path stays exact.
uint64_t clamp_u64(const BigInt& v) {
  if (v > BigInt(UINT64_MAX)) return UINT64_MAX;
  return static_cast<uint64_t>(v);
}

SatResult enumerate_atom(AtomId atom, int atom_width, std::span<const Constraint> cs) {
  std::vector<FastConstraint> fast;
  fast.reserve(cs.size());
  for (const Constraint& c : cs) {
    uint64_t mask = c.width >= 64 ? UINT64_MAX : ((uint64_t{1} << c.width) - 1);
    const bool ternary =
        c.relation == Relation::kTernary || c.relation == Relation::kNotTernary;
    if (ternary) {
      // Only the low bits can meet the slice.
      fast.push_back({c.lo, mask, c.relation, static_cast<uint64_t>(c.a & low_mask(64)),
                      static_cast<uint64_t>(c.b & low_mask(64))});
    } else {
      fast.push_back({c.lo, mask, c.relation, clamp_u64(c.a), clamp_u64(c.b)});
    }
  }
  // Saturated constants compare correctly: the slice is at most 16 bits wide.
  const uint64_t limit = uint64_t{1} << atom_width;
  for (uint64_t x = 0; x < limit; ++x) {
    bool ok = true;
    for (const FastConstraint& c : fast) {
      if (!fast_holds(c, x)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      SatResult r;
      r.status = SatStatus::kSat;
      r.witness[atom] = x;
      return r;
    }
  }
  return {SatStatus::kUnsat, {}};
}

enum class Tri { kAlways, kNever, kMaybe };

Tri flip(Tri t) {
  if (t == Tri::kAlways) return Tri::kNever;
  if (t == Tri::kNever) return Tri::kAlways;
  return t;
}

// Classifies a constraint over all atoms whose top bits equal `prefix`, with
// `free_bits` low bits still open.
Tri classify(const Constraint& c, const BigInt& prefix, int free_bits) {
  const int u = std::clamp(free_bits - c.lo, 0, c.width);
  const BigInt s0 = ((prefix << free_bits) >> c.lo) & low_mask(c.width);
  const BigInt s1 = s0 + low_mask(u);
  Tri t = Tri::kMaybe;
  switch (c.relation) {
    case Relation::kEq:
    case Relation::kNeq:
      if (u == 0) {
        t = s0 == c.a ? Tri::kAlways : Tri::kNever;
      } else {
        t = (c.a >> u) == (s0 >> u) ? Tri::kMaybe : Tri::kNever;
      }
      return c.relation == Relation::kEq ? t : flip(t);
    case Relation::kTernary:
    case Relation::kNotTernary: {
      BigInt known = c.b & ~low_mask(u) & low_mask(c.width);
      if (((s0 ^ c.a) & known) != 0) {
        t = Tri::kNever;
      } else if ((c.b & low_mask(u)) == 0) {
        t = Tri::kAlways;
      }
      return c.relation == Relation::kTernary ? t : flip(t);
    }
    case Relation::kRange:
    case Relation::kNotRange:
      if (s0 >= c.a && s1 <= c.b) {
        t = Tri::kAlways;
      } else if (s1 < c.a || s0 > c.b) {
        t = Tri::kNever;
      }
      return c.relation == Relation::kRange ? t : flip(t);
  }
  return Tri::kMaybe;
}

class PrefixSearch {
 public:
  PrefixSearch(int width, std::span<const Constraint> cs, long budget)
      : width_(width), cs_(cs), budget_(budget) {}

  SatStatus run(BigInt* witness) { return visit(0, 0, witness); }

 private:
  SatStatus visit(int depth, const BigInt& prefix, BigInt* witness) {
    if (--budget_ < 0) return SatStatus::kUnknown;
    const int free_bits = width_ - depth;
    bool all_always = true;
    for (const Constraint& c : cs_) {
      Tri t = classify(c, prefix, free_bits);
      if (t == Tri::kNever) return SatStatus::kUnsat;
      if (t == Tri::kMaybe) all_always = false;
    }
    if (all_always) {
      *witness = prefix << free_bits;
      return SatStatus::kSat;
    }
    if (free_bits == 0) return SatStatus::kUnsat;
    bool unknown = false;
    for (int bit = 0; bit < 2; ++bit) {
      SatStatus s = visit(depth + 1, (prefix << 1) | bit, witness);
      if (s == SatStatus::kSat) return s;
      if (s == SatStatus::kUnknown) unknown = true;
      if (budget_ < 0) return SatStatus::kUnknown;
    }
    return unknown ? SatStatus::kUnknown : SatStatus::kUnsat;
  }

  int width_;
  std::span<const Constraint> cs_;
  long budget_;
};

}  // namespace

SatResult atom_sat(AtomId atom, int atom_width, std::span<const Constraint> constraints,
                   const SolverOptions& options) {
  for (const Constraint& c : constraints) {
    if (c.atom != atom) throw std::invalid_argument("constraint on a different atom");
    if (c.lo < 0 || c.width < 1 || c.lo + c.width > atom_width) {
      throw std::invalid_argument("constraint slice outside atom");
    }
  }
  if (atom_width <= kEnumerationLimit) return enumerate_atom(atom, atom_width, constraints);
  BigInt witness = 0;
  PrefixSearch search(atom_width, constraints, options.node_budget);
  SatResult r;
  r.status = search.run(&witness);
  if (r.status == SatStatus::kSat) r.witness[atom] = witness;
  return r;
}

SatResult constraint_sat(std::span<const Constraint> constraints,
                         const std::map<AtomId, int>& atom_widths,
                         const SolverOptions& options) {
  std::map<AtomId, std::vector<Constraint>> by_atom;
  for (const Constraint& c : constraints) {
    if (!atom_widths.count(c.atom)) throw std::invalid_argument("undeclared atom");
    by_atom[c.atom].push_back(c);
  }
  SatResult out;
  out.status = SatStatus::kSat;
  for (const auto& [atom, width] : atom_widths) {
    auto it = by_atom.find(atom);
    if (it == by_atom.end()) {
      out.witness[atom] = 0;
      continue;
    }
    SatResult r = atom_sat(atom, width, it->second, options);
    if (r.status == SatStatus::kUnsat) return {SatStatus::kUnsat, {}};
    if (r.status == SatStatus::kUnknown) {
      out.status = SatStatus::kUnknown;
      continue;
    }
    out.witness[atom] = r.witness[atom];
  }
  if (out.status != SatStatus::kSat) out.witness.clear();
  return out;
}

}  // namespace p4sem
