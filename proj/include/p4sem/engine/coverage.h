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


#ifndef P4SEM_ENGINE_COVERAGE_H_
#define P4SEM_ENGINE_COVERAGE_H_

#include <array>
#include <cstdint>
#include <string_view>

namespace p4sem {

// Registry of semantic rule sites. Each entry is one rule of the semantics
// that a test can exercise.
#define P4SEM_RULE_SITES(X)                      \
  X(kParseExtract, "parse.extract")              \
  X(kParseExtractStackNext, "parse.extract.next") \
  X(kParseExtractVarbit, "parse.extract.varbit") \
  X(kParseSetMetadata, "parse.set_metadata")     \
  X(kParseReturnState, "parse.return.state")     \
  X(kParseReturnControl, "parse.return.control") \
  X(kParseSelectCase, "parse.select.case")       \
  X(kParseSelectMasked, "parse.select.masked")   \
  X(kParseSelectDefault, "parse.select.default") \
  X(kParseSelectUnhandled, "parse.select.unhandled") \
  X(kParseCurrent, "parse.current")              \
  X(kParseLatest, "parse.latest")                \
  X(kParseErrorReturn, "parse.parse_error")      \
  X(kParseOutOfPacket, "parse.exception.out_of_packet") \
  X(kParseStackFull, "parse.exception.index_out_of_bounds") \
  X(kParseHandlerUser, "parse.handler.declared") \
  X(kParseHandlerImplicitDrop, "parse.handler.implicit_drop") \
  X(kParseHandlerToControl, "parse.handler.to_control") \
  X(kParseHandlerDrop, "parse.handler.parser_drop") \
  X(kVerifyPass, "checksum.verify.pass")         \
  X(kVerifyFail, "checksum.verify.fail")         \
  X(kUpdateChecksum, "checksum.update")          \
  X(kHashCsum16, "hash.csum16")                  \
  X(kHashCrc16, "hash.crc16")                    \
  X(kHashCrc32, "hash.crc32")                    \
  X(kHashXor16, "hash.xor16")                    \
  X(kHashIdentity, "hash.identity")              \
  X(kControlApply, "control.apply")              \
  X(kControlIfTrue, "control.if.true")           \
  X(kControlIfFalse, "control.if.false")         \
  X(kControlCall, "control.call")                \
  X(kApplyHitCase, "control.apply.hit")          \
  X(kApplyMissCase, "control.apply.miss")        \
  X(kApplyActionCase, "control.apply.action_case") \
  X(kApplyDefaultCase, "control.apply.default_case") \
  X(kTableHit, "table.hit")                      \
  X(kTableMissDefault, "table.miss.default")     \
  X(kTableMissNone, "table.miss.none")           \
  X(kMatchExact, "table.match.exact")            \
  X(kMatchTernary, "table.match.ternary")        \
  X(kMatchLpm, "table.match.lpm")                \
  X(kMatchRange, "table.match.range")            \
  X(kMatchValid, "table.match.valid")            \
  X(kDirectCounter, "table.direct.counter")      \
  X(kDirectMeter, "table.direct.meter")          \
  X(kActionNested, "action.nested_call")         \
  X(kActionExtern, "action.extern")              \
  X(kExprArith, "expr.arith")                    \
  X(kExprBitwise, "expr.bitwise")                \
  X(kExprShift, "expr.shift")                    \
  X(kExprCompare, "expr.compare")                \
  X(kExprLogical, "expr.logical")                \
  X(kExprUnary, "expr.unary")                    \
  X(kExprValid, "expr.valid")                    \
  X(kPrimModifyField, "primitive.modify_field")  \
  X(kPrimModifyFieldMasked, "primitive.modify_field.mask") \
  X(kPrimAddToField, "primitive.add_to_field")   \
  X(kPrimSubtractFromField, "primitive.subtract_from_field") \
  X(kPrimAdd, "primitive.add")                   \
  X(kPrimSubtract, "primitive.subtract")         \
  X(kPrimBitAnd, "primitive.bit_and")            \
  X(kPrimBitOr, "primitive.bit_or")              \
  X(kPrimBitXor, "primitive.bit_xor")            \
  X(kPrimShiftLeft, "primitive.shift_left")      \
  X(kPrimShiftRight, "primitive.shift_right")    \
  X(kPrimAddHeader, "primitive.add_header")      \
  X(kPrimRemoveHeader, "primitive.remove_header") \
  X(kPrimCopyHeader, "primitive.copy_header")    \
  X(kPrimPush, "primitive.push")                 \
  X(kPrimPop, "primitive.pop")                   \
  X(kPrimRegisterRead, "primitive.register_read") \
  X(kPrimRegisterWrite, "primitive.register_write") \
  X(kPrimCount, "primitive.count")               \
  X(kPrimExecuteMeter, "primitive.execute_meter") \
  X(kPrimDrop, "primitive.drop")                 \
  X(kPrimNoOp, "primitive.no_op")                \
  X(kPrimTruncate, "primitive.truncate")         \
  X(kPrimHashOffset, "primitive.modify_field_with_hash_based_offset") \
  X(kPrimResubmit, "primitive.resubmit")         \
  X(kPrimRecirculate, "primitive.recirculate")   \
  X(kPrimCloneI2I, "primitive.clone_ingress_pkt_to_ingress") \
  X(kPrimCloneE2I, "primitive.clone_egress_pkt_to_ingress") \
  X(kPrimCloneI2E, "primitive.clone_ingress_pkt_to_egress") \
  X(kPrimCloneE2E, "primitive.clone_egress_pkt_to_egress") \
  X(kPrimDigest, "primitive.generate_digest")    \
  X(kPipeIngress, "pipeline.ingress")            \
  X(kPipeEgress, "pipeline.egress")              \
  X(kPipeSkipIngress, "pipeline.skip_ingress")   \
  X(kPipeResubmitted, "pipeline.resubmitted")    \
  X(kPipeRecirculated, "pipeline.recirculated")  \
  X(kPipeDropIngress, "pipeline.drop.ingress")   \
  X(kPipeDropEgress, "pipeline.drop.egress")     \
  X(kPipeDeparse, "pipeline.deparse")            \
  X(kPipePayload, "pipeline.payload")            \
  X(kPipeTruncated, "pipeline.truncated")        \
  X(kPipeEmit, "pipeline.emit")                  \
  X(kPipeUndefinedEgress, "pipeline.undefined_egress")

enum class Site {
#define P4SEM_SITE_ENUM(id, name) id,
  P4SEM_RULE_SITES(P4SEM_SITE_ENUM)
#undef P4SEM_SITE_ENUM
};

inline constexpr int kSiteCount = 0
#define P4SEM_SITE_COUNT(id, name) +1
    P4SEM_RULE_SITES(P4SEM_SITE_COUNT)
#undef P4SEM_SITE_COUNT
    ;

std::string_view site_name(Site site);

// Hit counts per rule site.
class Coverage {
 public:
  void hit(Site s) { ++hits_[static_cast<int>(s)]; }
  uint64_t hits(Site s) const { return hits_[static_cast<int>(s)]; }
  void merge(const Coverage& other);
  int exercised() const;
  double fraction() const { return static_cast<double>(exercised()) / kSiteCount; }

 private:
  std::array<uint64_t, kSiteCount> hits_{};
};

}  // namespace p4sem

#endif  // P4SEM_ENGINE_COVERAGE_H_
