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


#include <set>

#include "p4sem/common/error.h"
#include "p4sem/program/program.h"

namespace p4sem {

namespace {

void expand_instance(const Program& program, const InstanceRef& ref, std::vector<FlatItem>* out) {
  int type = ref.kind == InstanceRef::Kind::kStatic ? program.instances[ref.id].type
                                                    : program.stacks[ref.stack].type;
  const HeaderType& t = program.header_types[type];
  for (size_t f = 0; f < t.fields.size(); ++f) {
    FlatItem item;
    item.field.instance = ref;
    item.field.field = static_cast<int>(f);
    out->push_back(item);
  }
}

void flatten(const Program& program, int list, std::vector<int>* stack,
             std::vector<FlatItem>* out) {
  for (int open : *stack) {
    if (open == list) {
      throw Error(ErrorCode::kFieldListCycle,
                  "field list '" + program.field_lists[list].name + "' refers to itself");
    }
  }
  stack->push_back(list);
  for (const FieldListItem& item : program.field_lists[list].items) {
    switch (item.kind) {
      case FieldListItem::Kind::kField:
        out->push_back(FlatItem{false, item.field, Value()});
        break;
      case FieldListItem::Kind::kInstance:
        expand_instance(program, item.instance, out);
        break;
      case FieldListItem::Kind::kList:
        flatten(program, item.list, stack, out);
        break;
      case FieldListItem::Kind::kConst:
        out->push_back(FlatItem{true, FieldRef{}, item.constant});
        break;
    }
  }
  stack->pop_back();
}

}  // namespace

std::vector<FlatItem> flatten_field_list(const Program& program, int list) {
  std::vector<int> stack;
  std::vector<FlatItem> out;
  flatten(program, list, &stack, &out);
  return out;
}

std::vector<FlatItem> flatten_field_list(const Program& program, const std::string& name) {
  int id = program.field_list_id(name);
  if (id < 0) throw Error(ErrorCode::kUnresolvedName, "unknown field list '" + name + "'");
  return flatten_field_list(program, id);
}

}  // namespace p4sem
