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

#include "infgame/arena.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace infgame {

Arena& Arena::AddLeaf(VertexId id, UtilityAssignment payoffs) {
  index_.try_emplace(id, vertices_.size());
  vertices_.push_back(Vertex{std::move(id), Leaf{std::move(payoffs)}});
  return *this;
}

Arena& Arena::AddNode(VertexId id, AgentId agent,
                      std::map<ChoiceId, VertexId> successors) {
  index_.try_emplace(id, vertices_.size());
  vertices_.push_back(
      Vertex{std::move(id), Internal{std::move(agent), std::move(successors)}});
  return *this;
}

Arena& Arena::SetRoot(VertexId root) {
  root_ = std::move(root);
  return *this;
}

const Vertex* Arena::Find(const VertexId& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &vertices_[it->second];
}

const Vertex& Arena::At(const VertexId& id) const {
  const Vertex* v = Find(id);
  if (v == nullptr) throw ArenaError("unknown vertex '" + id + "'");
  return *v;
}

bool Arena::HasChoice(const ChoiceId& c) const {
  return std::find(choices_.begin(), choices_.end(), c) != choices_.end();
}

std::vector<VertexId> Arena::InternalIds() const {
  std::vector<VertexId> ids;
  for (const auto& [id, i] : index_) {
    if (!vertices_[i].is_leaf()) ids.push_back(id);
  }
  return ids;
}

std::vector<VertexId> Arena::ReachableFrom(const VertexId& from) const {
  std::set<VertexId> seen;
  std::vector<VertexId> stack;
  if (Find(from) != nullptr) {
    seen.insert(from);
    stack.push_back(from);
  }
  while (!stack.empty()) {
    const Vertex& v = At(stack.back());
    stack.pop_back();
    if (v.is_leaf()) continue;
    for (const auto& [c, next] : v.internal().successors) {
      if (Find(next) != nullptr && seen.insert(next).second) {
        stack.push_back(next);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool operator==(const Arena& a, const Arena& b) {
  auto as_set = [](const auto& xs) { return std::set(xs.begin(), xs.end()); };
  if (as_set(a.agents_) != as_set(b.agents_)) return false;
  if (as_set(a.choices_) != as_set(b.choices_)) return false;
  if (a.root_ != b.root_) return false;
  if (a.vertices_.size() != b.vertices_.size()) return false;
  for (const Vertex& v : a.vertices_) {
    const Vertex* w = b.Find(v.id);
    if (w == nullptr || !(*w == v)) return false;
  }
  return true;
}

const ChoiceId& Profile::ChosenAt(const VertexId& v) const {
  auto it = chosen_.find(v);
  if (it == chosen_.end()) {
    throw ArenaError("no choice recorded at vertex '" + v + "'");
  }
  return it->second;
}

Profile Profile::RootedAt(const VertexId& v) const {
  Arena arena = arena_;
  arena.SetRoot(v);
  return Profile(std::move(arena), chosen_);
}

std::string ValidationResult::Describe() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < defects.size(); ++i) {
    if (i > 0) out << "; ";
    out << defects[i].message;
  }
  return out.str();
}

ValidationResult Validate(const Arena& arena) {
  ValidationResult result;
  auto defect = [&](std::string subject, std::string message) {
    result.defects.push_back({std::move(subject), std::move(message)});
  };

  std::set<AgentId> agents;
  for (const AgentId& a : arena.agents()) {
    if (a.empty()) defect(a, "empty agent identifier");
    if (!agents.insert(a).second) defect(a, "duplicate agent '" + a + "'");
  }
  std::set<ChoiceId> choices;
  for (const ChoiceId& c : arena.choices()) {
    if (c.empty()) defect(c, "empty choice identifier");
    if (!choices.insert(c).second) defect(c, "duplicate choice '" + c + "'");
  }
  if (choices.empty()) defect("", "choice alphabet is empty");

  std::set<VertexId> ids;
  for (const Vertex& v : arena.vertices()) {
    if (v.id.empty()) defect(v.id, "empty vertex identifier");
    if (!ids.insert(v.id).second) defect(v.id, "duplicate vertex '" + v.id + "'");
  }

  for (const Vertex& v : arena.vertices()) {
    if (v.is_leaf()) {
      const UtilityAssignment& payoffs = v.leaf().payoffs;
      for (const auto& [a, u] : payoffs) {
        if (!agents.contains(a)) {
          defect(v.id, "leaf " + v.id + " assigns unknown agent '" + a + "'");
        }
      }
      for (const AgentId& a : agents) {
        if (!payoffs.contains(a)) {
          defect(v.id, "leaf " + v.id + " has no utility for agent '" + a + "'");
        }
      }
      continue;
    }
    const Internal& node = v.internal();
    if (!agents.contains(node.agent)) {
      defect(v.id, "node " + v.id + " has unknown agent '" + node.agent + "'");
    }
    for (const auto& [c, next] : node.successors) {
      if (!choices.contains(c)) {
        defect(v.id, "node " + v.id + " uses unknown choice '" + c + "'");
      }
      if (!ids.contains(next)) {
        defect(v.id, "node " + v.id + " refers to unknown vertex '" + next + "'");
      }
    }
    for (const ChoiceId& c : choices) {
      if (!node.successors.contains(c)) {
        defect(v.id, "successor map not total for node " + v.id +
                         " (missing '" + c + "')");
      }
    }
  }

  if (arena.root().empty()) {
    defect("", "missing root");
  } else if (!ids.contains(arena.root())) {
    defect(arena.root(), "root refers to unknown vertex '" + arena.root() + "'");
  }
  return result;
}

ValidationResult Validate(const Profile& profile) {
  ValidationResult result = Validate(profile.arena());
  const Arena& arena = profile.arena();
  for (const auto& [v, c] : profile.chosen()) {
    const Vertex* vertex = arena.Find(v);
    if (vertex == nullptr) {
      result.defects.push_back({v, "choice recorded for unknown vertex '" + v + "'"});
    } else if (vertex->is_leaf()) {
      result.defects.push_back({v, "choice recorded for leaf '" + v + "'"});
    } else if (!arena.HasChoice(c)) {
      result.defects.push_back(
          {v, "node " + v + " chooses unknown choice '" + c + "'"});
    }
  }
  for (const VertexId& v : arena.InternalIds()) {
    if (!profile.chosen().contains(v)) {
      result.defects.push_back({v, "no choice recorded for node " + v});
    }
  }
  return result;
}

void RequireValid(const Arena& arena) {
  ValidationResult r = Validate(arena);
  if (!r.ok()) throw ArenaError("invalid arena: " + r.Describe());
}

void RequireValid(const Profile& profile) {
  ValidationResult r = Validate(profile);
  if (!r.ok()) throw ArenaError("invalid profile: " + r.Describe());
}

Arena UnderlyingGame(const Profile& profile) { return profile.arena(); }

Profile Deviate(const Profile& profile, const VertexId& at, const ChoiceId& to) {
  const Vertex* v = profile.arena().Find(at);
  if (v == nullptr) throw ArenaError("unknown vertex '" + at + "'");
  if (v->is_leaf()) throw ArenaError("cannot deviate at leaf '" + at + "'");
  if (!profile.arena().HasChoice(to)) {
    throw ArenaError("unknown choice '" + to + "'");
  }
  std::map<VertexId, ChoiceId> chosen = profile.chosen();
  chosen[at] = to;
  return Profile(profile.arena(), std::move(chosen));
}

Profile BuildComb(const UtilityAssignment& leaf_after_alice,
                  const UtilityAssignment& leaf_after_bob,
                  const ChoiceId& alice_choice, const ChoiceId& bob_choice) {
  Arena arena({kAlice, kBob}, {kDown, kRight});
  arena.AddNode(kAliceVertex, kAlice,
                {{kDown, kLeafAfterAlice}, {kRight, kBobVertex}});
  arena.AddNode(kBobVertex, kBob,
                {{kDown, kLeafAfterBob}, {kRight, kAliceVertex}});
  arena.AddLeaf(kLeafAfterAlice, leaf_after_alice);
  arena.AddLeaf(kLeafAfterBob, leaf_after_bob);
  arena.SetRoot(kAliceVertex);
  return Profile(std::move(arena),
                 {{kAliceVertex, alice_choice}, {kBobVertex, bob_choice}});
}

}  // namespace infgame
