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

// Brute-force reference implementations used only by tests. They work on
// the public Arena/Profile maps directly and share no code with the
// indexed evaluation in src/.

#ifndef INFGAME_TESTS_TESTING_ORACLES_H_
#define INFGAME_TESTS_TESTING_ORACLES_H_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "infgame/arena.h"

namespace infgame::testing {

// Step-by-step walk along chosen edges. Gives the leaf payoffs, or nullopt
// once a vertex repeats.
inline std::optional<UtilityAssignment> WalkChosen(const Profile& p,
                                                   const VertexId& from) {
  std::set<VertexId> visited;
  VertexId v = from;
  while (true) {
    const Vertex& vertex = p.arena().At(v);
    if (vertex.is_leaf()) return vertex.leaf().payoffs;
    if (!visited.insert(v).second) return std::nullopt;
    v = vertex.internal().successors.at(p.chosen().at(v));
  }
}

inline std::set<VertexId> ReachableByAnyEdge(const Arena& arena,
                                             const VertexId& from) {
  std::set<VertexId> seen{from};
  std::vector<VertexId> todo{from};
  while (!todo.empty()) {
    VertexId v = todo.back();
    todo.pop_back();
    const Vertex& vertex = arena.At(v);
    if (vertex.is_leaf()) continue;
    for (const auto& [c, next] : vertex.internal().successors) {
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

enum class OracleStatus { kOk, kViolation, kNonConvergent };

// Replays every one-shot deviation: at v, take choice c once, then walk the
// original profile. Leaves are ok.
inline std::map<VertexId, OracleStatus> ReplayDeviations(const Profile& p) {
  std::map<VertexId, OracleStatus> out;
  for (const VertexId& v : ReachableByAnyEdge(p.arena(), p.root())) {
    const Vertex& vertex = p.arena().At(v);
    if (vertex.is_leaf()) {
      out[v] = OracleStatus::kOk;
      continue;
    }
    const AgentId& mover = vertex.internal().agent;
    std::optional<UtilityAssignment> chosen =
        WalkChosen(p, vertex.internal().successors.at(p.chosen().at(v)));
    if (!chosen) {
      out[v] = OracleStatus::kNonConvergent;
      continue;
    }
    out[v] = OracleStatus::kOk;
    for (const auto& [c, next] : vertex.internal().successors) {
      std::optional<UtilityAssignment> deviated = WalkChosen(p, next);
      if (deviated && deviated->at(mover) > chosen->at(mover)) {
        out[v] = OracleStatus::kViolation;
      }
    }
  }
  return out;
}

inline bool ReplaySpe(const Profile& p) {
  for (const auto& [v, status] : ReplayDeviations(p)) {
    if (status != OracleStatus::kOk) return false;
  }
  return true;
}

// Every positional profile over `arena`, built with nested iteration over
// sorted internal ids and sorted choices.
inline std::vector<Profile> BruteForceUniverse(const Arena& arena) {
  std::vector<VertexId> internal;
  for (const Vertex& v : arena.vertices()) {
    if (!v.is_leaf()) internal.push_back(v.id);
  }
  std::sort(internal.begin(), internal.end());
  std::vector<ChoiceId> choices = arena.choices();
  std::sort(choices.begin(), choices.end());

  std::vector<std::map<VertexId, ChoiceId>> partial{{}};
  for (const VertexId& v : internal) {
    std::vector<std::map<VertexId, ChoiceId>> next;
    for (const auto& prefix : partial) {
      for (const ChoiceId& c : choices) {
        auto extended = prefix;
        extended[v] = c;
        next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }
  std::vector<Profile> out;
  for (auto& chosen : partial) out.emplace_back(arena, std::move(chosen));
  return out;
}

// Two vertices of finite graphs are bisimilar iff their unfoldings agree to
// depth |pairs|, since a disagreement, when there is one, shows up along a
// path that visits no vertex pair twice. Memoized on (va, vb, depth).
class BoundedUnfolding {
 public:
  BoundedUnfolding(const Arena& a, const Arena& b) : a_(a), b_(b) {}

  bool Agree(const VertexId& va, const VertexId& vb, std::size_t depth) {
    auto key = std::make_tuple(va, vb, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Vertex& x = a_.At(va);
    const Vertex& y = b_.At(vb);
    bool same;
    if (x.is_leaf() || y.is_leaf()) {
      same = x.is_leaf() && y.is_leaf() && x.leaf().payoffs == y.leaf().payoffs;
    } else if (x.internal().agent != y.internal().agent) {
      same = false;
    } else {
      same = true;
      if (depth > 0) {
        for (const auto& [c, next] : x.internal().successors) {
          if (!Agree(next, y.internal().successors.at(c), depth - 1)) {
            same = false;
            break;
          }
        }
      }
    }
    memo_[key] = same;
    return same;
  }

 private:
  const Arena& a_;
  const Arena& b_;
  std::map<std::tuple<VertexId, VertexId, std::size_t>, bool> memo_;
};

inline bool BoundedUnfoldingSameGame(const Arena& a, const VertexId& va,
                                     const Arena& b, const VertexId& vb) {
  return BoundedUnfolding(a, b).Agree(
      va, vb, a.vertices().size() * b.vertices().size());
}

}  // namespace infgame::testing

#endif  // INFGAME_TESTS_TESTING_ORACLES_H_
