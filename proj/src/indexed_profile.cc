// Copyright 2026 The infgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "indexed_profile.h"

#include <algorithm>

namespace infgame::internal {

IndexedArena::IndexedArena(const Arena& arena) {
  RequireValid(arena);
  for (const Vertex& v : arena.vertices()) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());
  for (int i = 0; i < size(); ++i) {
    index.emplace(ids[i], i);
    vertex.push_back(&arena.At(ids[i]));
  }
  choices = arena.choices();
  std::sort(choices.begin(), choices.end());

  succ.resize(ids.size());
  for (int i = 0; i < size(); ++i) {
    if (is_leaf(i)) continue;
    const auto& successors = vertex[i]->internal().successors;
    succ[i].reserve(choices.size());
    for (const ChoiceId& c : choices) {
      succ[i].push_back(index.at(successors.at(c)));
    }
  }
  root = index.at(arena.root());
}

int IndexedArena::ChoiceIndex(const ChoiceId& c) const {
  auto it = std::lower_bound(choices.begin(), choices.end(), c);
  if (it == choices.end() || *it != c) {
    throw ArenaError("unknown choice '" + c + "'");
  }
  return static_cast<int>(it - choices.begin());
}

ChoiceVector IndexChoices(const IndexedArena& arena, const Profile& profile) {
  RequireValid(profile);
  ChoiceVector chosen(arena.size(), kNone);
  for (int v = 0; v < arena.size(); ++v) {
    if (!arena.is_leaf(v)) {
      chosen[v] = arena.ChoiceIndex(profile.ChosenAt(arena.ids[v]));
    }
  }
  return chosen;
}

std::vector<int> ResolveOutcomes(const IndexedArena& arena,
                                 const ChoiceVector& chosen) {
  constexpr int kUnknown = -2;
  const int n = arena.size();
  std::vector<int> outcome(n, kUnknown);
  std::vector<int> walk_id(n, -1);
  std::vector<int> walk;
  for (int start = 0; start < n; ++start) {
    if (outcome[start] != kUnknown) continue;
    walk.clear();
    int v = start;
    int result = kNone;
    while (true) {
      if (outcome[v] != kUnknown) {
        result = outcome[v];
        break;
      }
      if (walk_id[v] == start) {
        result = kNone;  // closed a cycle within this walk
        break;
      }
      if (arena.is_leaf(v)) {
        outcome[v] = v;
        result = v;
        break;
      }
      walk_id[v] = start;
      walk.push_back(v);
      v = arena.succ[v][chosen[v]];
    }
    for (int w : walk) outcome[w] = result;
  }
  return outcome;
}

}  // namespace infgame::internal
