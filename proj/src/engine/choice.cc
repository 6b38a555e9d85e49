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


#include "p4sem/engine/choice.h"

#include "p4sem/common/error.h"

namespace p4sem {

namespace {

constexpr std::string_view kNames[kChoiceKindCount] = {
    "deparse-order",        "verify-order",     "update-order",
    "stateful-update-order", "network-schedule", "link-loss",
    "symbolic-branch",
};

}  // namespace

std::string_view choice_kind_name(ChoiceKind kind) { return kNames[static_cast<int>(kind)]; }

bool parse_choice_kind(std::string_view name, ChoiceKind* out) {
  for (int i = 0; i < kChoiceKindCount; ++i) {
    if (kNames[i] == name) {
      *out = static_cast<ChoiceKind>(i);
      return true;
    }
  }
  return false;
}

std::set<ChoiceKind> parse_focus(std::string_view spec) {
  std::set<ChoiceKind> out;
  size_t start = 0;
  while (start <= spec.size()) {
    size_t comma = spec.find(',', start);
    std::string_view item =
        spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (item == "all") {
      for (int i = 0; i < kChoiceKindCount; ++i) out.insert(static_cast<ChoiceKind>(i));
    } else if (!item.empty() && item != "none") {
      ChoiceKind k;
      if (!parse_choice_kind(item, &k)) {
        throw Error(ErrorCode::kInvalidArgument, "unknown choice kind '" + std::string(item) + "'");
      }
      out.insert(k);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int ReplayChooser::choose(ChoiceKind kind, int n, std::string_view site) {
  if (n < 2 || !focused(kind)) return 0;
  if (pos_ < prefix_.size()) {
    int alt = prefix_[pos_++];
    return alt < n ? alt : 0;
  }
  ++pos_;
  fresh_.push_back({kind, n, std::string(site)});
  return 0;
}

std::vector<int> ReplayChooser::decisions() const {
  std::vector<int> d = prefix_;
  d.resize(prefix_.size() + fresh_.size(), 0);
  return d;
}

std::vector<std::vector<int>> sibling_prefixes(const std::vector<int>& prefix,
                                               const std::vector<ReplayChooser::Branch>& fresh) {
  std::vector<std::vector<int>> out;
  for (size_t j = 0; j < fresh.size(); ++j) {
    for (int alt = 1; alt < fresh[j].alternatives; ++alt) {
      std::vector<int> p = prefix;
      p.resize(prefix.size() + j, 0);
      p.push_back(alt);
      out.push_back(std::move(p));
    }
  }
  return out;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<int> nth_permutation(int n, long index) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::vector<int> out;
  for (int i = n; i >= 1; --i) {
    long block = factorial(i - 1);
    long k = index / block;
    index %= block;
    out.push_back(pool[k]);
    pool.erase(pool.begin() + k);
  }
  return out;
}

}  // namespace p4sem
