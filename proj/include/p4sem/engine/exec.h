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


#ifndef P4SEM_ENGINE_EXEC_H_
#define P4SEM_ENGINE_EXEC_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "p4sem/common/bits.h"
#include "p4sem/engine/choice.h"
#include "p4sem/engine/coverage.h"
#include "p4sem/engine/path_condition.h"
#include "p4sem/program/program.h"
#include "p4sem/runtime/config.h"
#include "p4sem/runtime/profile.h"

namespace p4sem {

struct EngineOptions {
  int parse_budget = 10000;   // parser state transitions per packet
  int max_call_depth = 128;   // nested compound-action calls
};

// Raised inside the parser; dispatched to exception handlers.
struct ParserException {
  std::string name;  // "p4_pe_out_of_packet", or a declared exception
};

// An argument bound in an action frame: a value supplied by a table entry,
// an unevaluated expression of the calling frame, or an object name.
struct FrameArg {
  bool has_value = false;
  Value value;
  RExprPtr expr;
  int frame = -1;  // frame in which `expr` is evaluated
  std::string name;
};

struct Frame {
  int action = -1;
  std::vector<FrameArg> args;
};

struct PendingClone {
  PrimitiveOp op = PrimitiveOp::kCloneI2I;
  BigInt session = 0;
  std::vector<CarriedField> fields;
};

// Everything the engine needs while one packet moves through a node.
struct ExecContext {
  ExecContext(Config& c, const TargetProfile& prof, Chooser& ch, PathCondition& path,
              Coverage* cov = nullptr, EngineOptions opts = {})
      : cfg(c), program(*c.program), profile(prof), chooser(ch), pc(path), coverage(cov),
        options(opts) {}

  Config& cfg;
  const Program& program;
  const TargetProfile& profile;
  Chooser& chooser;
  PathCondition& pc;
  Coverage* coverage;
  EngineOptions options;

  // Current packet and parser position.
  Packet packet;
  size_t offset = 0;
  InstanceId latest = -1;
  const std::vector<Value>* self_fields = nullptr;  // header under extraction

  // Action frames; `current_frame` is where parameters are looked up.
  std::vector<Frame> frames;
  int current_frame = -1;

  bool dropped = false;
  bool in_egress = false;
  std::optional<std::vector<CarriedField>> resubmit;
  std::optional<std::vector<CarriedField>> recirculate;
  std::vector<PendingClone> clones;
  std::optional<int64_t> truncate_bytes;

  void hit(Site s) {
    if (coverage != nullptr) coverage->hit(s);
  }
  int choose(ChoiceKind kind, int n, std::string_view site) {
    return n < 2 ? 0 : chooser.choose(kind, n, site);
  }
  // Decides `c` on the current path; forks (symbolic-branch) when both
  // outcomes are feasible and records the chosen side.
  bool branch(const Constraint& c, std::string_view site);
};

// ---- expressions ----

Value eval(ExecContext& ctx, const RExpr& e, const std::string& site);
// Truth of a condition; symbolic values fork on `!= 0`.
bool truthy(ExecContext& ctx, const Value& v, const std::string& site);
// Symbolic values fork over their feasible concrete values (at most 256,
// else STUCK(SYMBOLIC_UNSUPPORTED)). Undef sticks with UNDEF_IN_EXPR.
Value concretize(ExecContext& ctx, const Value& v, const std::string& site);
// (x & mask) == (v & mask), forking when x is symbolic.
bool match_ternary(ExecContext& ctx, const Value& x, const BigInt& v, const BigInt& mask,
                   const std::string& site);
// lo <= x <= hi (unsigned), forking when x is symbolic.
bool match_range(ExecContext& ctx, const Value& x, const BigInt& lo, const BigInt& hi,
                 const std::string& site);

InstanceId resolve_instance(ExecContext& ctx, const InstanceRef& ref, const std::string& site);

// Destination field of a primitive argument.
struct FieldTarget {
  InstanceId instance = -1;
  int field = -1;
};
FieldTarget resolve_lvalue(ExecContext& ctx, const RExpr& e, const std::string& site);
// Object named by a frame argument chain, e.g. a register passed to a
// compound action.
std::string resolve_object_name(ExecContext& ctx, int param, const std::string& site);

// ---- field lists and hashes ----

// Concatenation of the list's field values, most significant bit first.
// Symbolic values are concretized.
BitString serialize_field_list(ExecContext& ctx, const std::vector<FlatItem>& items,
                               const std::string& site);
// Values of the list's fields, for carrying across resubmit/recirculate/clone.
std::vector<CarriedField> capture_field_list(ExecContext& ctx, int list, const std::string& site);
BigInt compute_calculation(ExecContext& ctx, int calculation, const std::string& site);

// ---- packet access ----

// Bits available from the current packet, forking on a symbolic length.
bool packet_has_bits(ExecContext& ctx, size_t end_bit, const std::string& site);
// Reads packet bits [offset, offset + width). `designation` names the header
// field being extracted (for symbolic inputs); empty for plain lookahead.
Value read_packet(ExecContext& ctx, size_t offset, int width, const std::string& instance_name,
                  const std::string& field_name, const std::string& site);
// The part of `p` after bit `offset`.
Packet packet_suffix(const Packet& p, size_t offset);
// Packet length in bytes as a value (symbolic for a symbolic-length input).
Value packet_length_value(ExecContext& ctx);

}  // namespace p4sem

#endif  // P4SEM_ENGINE_EXEC_H_
