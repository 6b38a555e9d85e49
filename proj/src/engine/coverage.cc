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


#include "p4sem/engine/coverage.h"

namespace p4sem {

namespace {

constexpr std::string_view kSiteNames[] = {
#define P4SEM_SITE_NAME(id, name) name,
    P4SEM_RULE_SITES(P4SEM_SITE_NAME)
#undef P4SEM_SITE_NAME
};

}  // namespace

std::string_view site_name(Site site) { return kSiteNames[static_cast<int>(site)]; }

void Coverage::merge(const Coverage& other) {
  for (int i = 0; i < kSiteCount; ++i) hits_[i] += other.hits_[i];
}

int Coverage::exercised() const {
  int n = 0;
  for (uint64_t h : hits_) n += h > 0 ? 1 : 0;
  return n;
}

}  // namespace p4sem
