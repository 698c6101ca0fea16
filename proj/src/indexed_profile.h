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

#ifndef INFGAME_SRC_INDEXED_PROFILE_H_
#define INFGAME_SRC_INDEXED_PROFILE_H_

#include <map>
#include <vector>

#include "infgame/arena.h"

namespace infgame::internal {

inline constexpr int kNone = -1;

// Dense view of a validated arena. Vertices and choices are numbered in
// lexicographic order of their identifiers.
struct IndexedArena {
  std::vector<VertexId> ids;
  std::map<VertexId, int> index;
  std::vector<ChoiceId> choices;
  std::vector<const Vertex*> vertex;
  std::vector<std::vector<int>> succ;  // empty for leaves
  int root = kNone;

  explicit IndexedArena(const Arena& arena);

  int size() const { return static_cast<int>(ids.size()); }
  bool is_leaf(int v) const { return vertex[v]->is_leaf(); }
  const AgentId& agent(int v) const { return vertex[v]->internal().agent; }
  const UtilityAssignment& payoffs(int v) const {
    return vertex[v]->leaf().payoffs;
  }
  int ChoiceIndex(const ChoiceId& c) const;
};

// chosen[v] is a choice index for internal vertices and kNone for leaves.
using ChoiceVector = std::vector<int>;

ChoiceVector IndexChoices(const IndexedArena& arena, const Profile& profile);

// For every vertex, the leaf its chosen path reaches, or kNone when the path
// is infinite. Linear in the number of vertices.
std::vector<int> ResolveOutcomes(const IndexedArena& arena,
                                 const ChoiceVector& chosen);

}  // namespace infgame::internal

#endif  // INFGAME_SRC_INDEXED_PROFILE_H_
