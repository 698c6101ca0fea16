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

#ifndef INFGAME_ARENA_H_
#define INFGAME_ARENA_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace infgame {

// Agents, choices and vertices are all addressed by symbolic identifiers so
// that documents, reports and witnesses can name them verbatim.
using AgentId = std::string;
using ChoiceId = std::string;
using VertexId = std::string;

// Payoffs are natural numbers, shared by every agent.
using Utility = std::uint64_t;

// A leaf payload: one utility per agent of the enclosing arena.
using UtilityAssignment = std::map<AgentId, Utility>;

struct Leaf {
  UtilityAssignment payoffs;

  friend bool operator==(const Leaf&, const Leaf&) = default;
};

struct Internal {
  AgentId agent;
  std::map<ChoiceId, VertexId> successors;

  friend bool operator==(const Internal&, const Internal&) = default;
};

struct Vertex {
  VertexId id;
  std::variant<Leaf, Internal> body;

  bool is_leaf() const { return std::holds_alternative<Leaf>(body); }
  const Leaf& leaf() const { return std::get<Leaf>(body); }
  const Internal& internal() const { return std::get<Internal>(body); }

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

class ArenaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite labelled graph presenting a possibly infinite game. Cycles in the
// successor relation stand for infinite branches of the unfolded tree.
//
// An Arena may be built in an inconsistent state (dangling references,
// duplicate identifiers, partial successor maps); Validate() reports every
// such defect. Operations documented as requiring a valid arena throw
// ArenaError when handed an invalid one.
class Arena {
 public:
  Arena() = default;
  Arena(std::vector<AgentId> agents, std::vector<ChoiceId> choices)
      : agents_(std::move(agents)), choices_(std::move(choices)) {}

  Arena& AddLeaf(VertexId id, UtilityAssignment payoffs);
  Arena& AddNode(VertexId id, AgentId agent,
                 std::map<ChoiceId, VertexId> successors);
  Arena& SetRoot(VertexId root);

  const std::vector<AgentId>& agents() const { return agents_; }
  const std::vector<ChoiceId>& choices() const { return choices_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const VertexId& root() const { return root_; }

  // Returns nullptr when no vertex carries `id`.
  const Vertex* Find(const VertexId& id) const;
  const Vertex& At(const VertexId& id) const;

  bool HasChoice(const ChoiceId& c) const;

  // Identifiers of internal vertices, in lexicographic order.
  std::vector<VertexId> InternalIds() const;

  // Vertices reachable from `from` along any edge, in lexicographic order.
  std::vector<VertexId> ReachableFrom(const VertexId& from) const;

  // Order-insensitive structural equality: agent and choice tables compare
  // as sets, vertices compare by identifier.
  friend bool operator==(const Arena& a, const Arena& b);

 private:
  std::vector<AgentId> agents_;
  std::vector<ChoiceId> choices_;
  std::vector<Vertex> vertices_;
  VertexId root_;
  std::map<VertexId, std::size_t> index_;
};

// A positional strategy profile: an arena plus one chosen choice per
// internal vertex.
class Profile {
 public:
  Profile() = default;
  Profile(Arena arena, std::map<VertexId, ChoiceId> chosen)
      : arena_(std::move(arena)), chosen_(std::move(chosen)) {}

  const Arena& arena() const { return arena_; }
  const std::map<VertexId, ChoiceId>& chosen() const { return chosen_; }
  const VertexId& root() const { return arena_.root(); }

  const ChoiceId& ChosenAt(const VertexId& v) const;

  // The same profile observed from another vertex.
  Profile RootedAt(const VertexId& v) const;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.arena_ == b.arena_ && a.chosen_ == b.chosen_;
  }

 private:
  Arena arena_;
  std::map<VertexId, ChoiceId> chosen_;
};

struct Defect {
  std::string subject;  // offending vertex or identifier
  std::string message;

  friend bool operator==(const Defect&, const Defect&) = default;
};

struct ValidationResult {
  std::vector<Defect> defects;

  bool ok() const { return defects.empty(); }
  std::string Describe() const;
};

ValidationResult Validate(const Arena& arena);
ValidationResult Validate(const Profile& profile);

// Throws ArenaError carrying the first defects when validation fails.
void RequireValid(const Arena& arena);
void RequireValid(const Profile& profile);

// Erases the choice annotations of `profile`.
Arena UnderlyingGame(const Profile& profile);

// Returns `profile` with the choice at `at` replaced by `to`.
// Throws ArenaError for an unknown or leaf vertex, or an unknown choice.
Profile Deviate(const Profile& profile, const VertexId& at, const ChoiceId& to);

// Identifiers used by the two-vertex comb.
inline constexpr char kAlice[] = "Alice";
inline constexpr char kBob[] = "Bob";
inline constexpr char kDown[] = "down";
inline constexpr char kRight[] = "right";
inline constexpr char kAliceVertex[] = "alice";
inline constexpr char kBobVertex[] = "bob";
inline constexpr char kLeafAfterAlice[] = "stop_alice";
inline constexpr char kLeafAfterBob[] = "stop_bob";

// The infinite comb over agents {Alice, Bob} and choices {down, right}:
// Alice's vertex goes down to `leaf_after_alice` and right to Bob's vertex;
// Bob's vertex goes down to `leaf_after_bob` and right back to Alice's.
// The profile is rooted at Alice's vertex.
Profile BuildComb(const UtilityAssignment& leaf_after_alice,
                  const UtilityAssignment& leaf_after_bob,
                  const ChoiceId& alice_choice, const ChoiceId& bob_choice);

}  // namespace infgame

#endif  // INFGAME_ARENA_H_
