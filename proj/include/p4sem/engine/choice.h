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


#ifndef P4SEM_ENGINE_CHOICE_H_
#define P4SEM_ENGINE_CHOICE_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace p4sem {

// Points where the semantics allows more than one next step.
enum class ChoiceKind {
  kDeparseOrder,
  kVerifyOrder,
  kUpdateOrder,
  kStatefulUpdateOrder,
  kNetworkSchedule,
  kLinkLoss,
  kSymbolicBranch,
};

inline constexpr int kChoiceKindCount = 7;

std::string_view choice_kind_name(ChoiceKind kind);
bool parse_choice_kind(std::string_view name, ChoiceKind* out);
// Comma-separated kind names; "all" and "none" are accepted.
std::set<ChoiceKind> parse_focus(std::string_view spec);

// Resolves choice points. Alternative 0 is always the canonical one.
class Chooser {
 public:
  virtual ~Chooser() = default;
  // `n` >= 1 alternatives; returns an index in [0, n).
  virtual int choose(ChoiceKind kind, int n, std::string_view site) = 0;
};

// Run mode: always the canonical alternative.
class CanonicalChooser : public Chooser {
 public:
  int choose(ChoiceKind, int, std::string_view) override { return 0; }
};

// Replays a fixed decision prefix for focused kinds, then takes alternative 0
// and records each further branch point so a search can enumerate siblings.
class ReplayChooser : public Chooser {
 public:
  struct Branch {
    ChoiceKind kind;
    int alternatives;
    std::string site;
  };

  ReplayChooser(std::vector<int> prefix, std::set<ChoiceKind> focus)
      : prefix_(std::move(prefix)), focus_(std::move(focus)) {}

  int choose(ChoiceKind kind, int n, std::string_view site) override;

  const std::vector<int>& prefix() const { return prefix_; }
  // Branch points met after the prefix ran out, in order.
  const std::vector<Branch>& fresh() const { return fresh_; }
  // Decisions taken so far (prefix plus canonical fresh ones).
  std::vector<int> decisions() const;
  bool focused(ChoiceKind kind) const { return focus_.count(kind) > 0; }

 private:
  std::vector<int> prefix_;
  std::set<ChoiceKind> focus_;
  size_t pos_ = 0;
  std::vector<Branch> fresh_;
};

// All prefixes that extend `prefix` by taking a non-canonical alternative at
// one of `fresh`'s branch points (and canonical ones before it).
std::vector<std::vector<int>> sibling_prefixes(const std::vector<int>& prefix,
                                               const std::vector<ReplayChooser::Branch>& fresh);

// Permutations of {0..n-1} in lexicographic order; `index` < n!.
std::vector<int> nth_permutation(int n, long index);
long factorial(int n);

}  // namespace p4sem

#endif  // P4SEM_ENGINE_CHOICE_H_
