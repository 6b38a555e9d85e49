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


#ifndef P4SEM_EXPLORE_BFS_H_
#define P4SEM_EXPLORE_BFS_H_

#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "p4sem/engine/choice.h"
#include "p4sem/engine/coverage.h"
#include "p4sem/engine/exec.h"

namespace p4sem {

struct SearchBudget {
  int64_t max_states = 200000;  // distinct states admitted to the frontier
  int max_depth = 64;           // steps along one path
};

struct SearchOptions {
  SearchBudget budget;
  std::set<ChoiceKind> focus;
  int workers = 1;
  Coverage* coverage = nullptr;
  EngineOptions engine;
};

// Branch points met in focused kinds and the alternatives explored there.
struct AlternativeStats {
  int64_t points = 0;
  int64_t alternatives = 0;
  int64_t explored = 0;
};

template <class S>
struct BfsOutcome {
  std::vector<S> terminals;  // states with no further step (including stuck)
  std::vector<S> cut;        // states left unexpanded at the depth bound
  std::map<ChoiceKind, AlternativeStats> alternatives;
  int64_t states = 0;
  bool partial = false;
};

// Breadth-first search over states that advance by one step at a time.
// One step may meet several choice points; each step is re-run once per
// decision prefix so that every alternative of a focused kind is taken.
// `S` carries `path` (decisions so far) and `depth`.
//   done(s)              -> no step applies
//   step(s, chooser, cov) advances s in place
//   key(s)               -> identity for the visited set
template <class S, class Done, class Step, class Key>
BfsOutcome<S> bfs(S initial, const SearchOptions& options, Done done, Step step, Key key) {
  BfsOutcome<S> out;
  std::unordered_set<std::string> visited;
  std::mutex mu;
  visited.insert(key(initial));
  out.states = 1;
  std::vector<S> level;
  level.push_back(std::move(initial));
  const int workers = std::max(1, options.workers);

  while (!level.empty()) {
    std::vector<std::vector<S>> next(workers);
    std::vector<BfsOutcome<S>> local(workers);
    std::vector<Coverage> cov(workers);

    auto expand = [&](int w, const S& s) {
      BfsOutcome<S>& mine = local[w];
      if (done(s)) {
        mine.terminals.push_back(s);
        return;
      }
      if (s.depth >= options.budget.max_depth) {
        mine.cut.push_back(s);
        mine.partial = true;
        return;
      }
      std::deque<std::vector<int>> prefixes{{}};
      while (!prefixes.empty()) {
        std::vector<int> prefix = std::move(prefixes.front());
        prefixes.pop_front();
        S c = s;
        ReplayChooser chooser(prefix, options.focus);
        step(c, chooser, options.coverage ? &cov[w] : nullptr);
        for (const ReplayChooser::Branch& b : chooser.fresh()) {
          AlternativeStats& st = mine.alternatives[b.kind];
          ++st.points;
          st.alternatives += b.alternatives;
          st.explored += b.alternatives;
        }
        for (std::vector<int>& p : sibling_prefixes(prefix, chooser.fresh())) {
          prefixes.push_back(std::move(p));
        }
        std::vector<int> d = chooser.decisions();
        c.path.insert(c.path.end(), d.begin(), d.end());
        ++c.depth;
        std::string k = key(c);
        std::lock_guard<std::mutex> lock(mu);
        if (visited.count(k)) continue;
        if (out.states >= options.budget.max_states) {
          mine.partial = true;
          continue;
        }
        visited.insert(std::move(k));
        ++out.states;
        next[w].push_back(std::move(c));
      }
    };

    if (workers == 1) {
      for (const S& s : level) expand(0, s);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          for (size_t i = w; i < level.size(); i += workers) expand(w, level[i]);
        });
      }
      for (std::thread& t : threads) t.join();
    }

    level.clear();
    for (int w = 0; w < workers; ++w) {
      BfsOutcome<S>& l = local[w];
      for (S& s : l.terminals) out.terminals.push_back(std::move(s));
      for (S& s : l.cut) out.cut.push_back(std::move(s));
      for (const auto& [kind, st] : l.alternatives) {
        AlternativeStats& a = out.alternatives[kind];
        a.points += st.points;
        a.alternatives += st.alternatives;
        a.explored += st.explored;
      }
      out.partial |= l.partial;
      if (options.coverage) options.coverage->merge(cov[w]);
      for (S& s : next[w]) level.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace p4sem

#endif  // P4SEM_EXPLORE_BFS_H_
