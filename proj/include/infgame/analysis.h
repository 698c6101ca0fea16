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

// Decision procedures over regular strategy profiles.
//
// Every predicate here is evaluated on the finite presentation; a cycle in
// the chosen-edge graph stands for an infinite play. All functions are pure
// and take their inputs by const reference, so concurrent calls on shared
// profiles are safe.

#ifndef INFGAME_ANALYSIS_H_
#define INFGAME_ANALYSIS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "infgame/arena.h"

namespace infgame {

inline constexpr std::size_t kDefaultCap = 4096;

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Utility was requested for a vertex whose chosen path never reaches a leaf.
class NotConvergent : public AnalysisError {
 public:
  explicit NotConvergent(const VertexId& from)
      : AnalysisError("chosen path from '" + from + "' does not converge") {}
};

class AlphabetMismatch : public AnalysisError {
 public:
  AlphabetMismatch()
      : AnalysisError("arenas do not share the same choice alphabet") {}
};

class UniverseTooLarge : public AnalysisError {
 public:
  // `count` is nullopt when the universe size does not fit in 64 bits.
  UniverseTooLarge(std::optional<std::uint64_t> count, std::size_t cap);

  std::optional<std::uint64_t> count() const { return count_; }
  std::size_t cap() const { return cap_; }

 private:
  std::optional<std::uint64_t> count_;
  std::size_t cap_;
};

// ---------------------------------------------------------------------------
// Order on utilities.

// n >= m, decided by the three rules
//   zero >= zero,  suc n >= zero,  n >= m  =>  suc n >= suc m.
bool NatGeq(Utility n, Utility m);

struct NatGeqDerivation {
  bool holds = false;
  // Rule applications made before the derivation closed or got stuck:
  // min(n, m) peeling steps plus the final base case.
  Utility depth = 0;
};

NatGeqDerivation DeriveNatGeq(Utility n, Utility m);

// ---------------------------------------------------------------------------
// Chosen paths.

struct Converges {
  // Starts at the queried vertex and ends at `leaf`.
  std::vector<VertexId> path;
  VertexId leaf;
  UtilityAssignment utilities;

  friend bool operator==(const Converges&, const Converges&) = default;
};

// Lasso witness of an infinite chosen path. Following chosen edges from the
// queried vertex visits `stem`, then repeats `cycle` forever.
struct Cycles {
  std::vector<VertexId> stem;
  std::vector<VertexId> cycle;

  friend bool operator==(const Cycles&, const Cycles&) = default;
};

using PathOutcome = std::variant<Converges, Cycles>;

PathOutcome IsConvergent(const Profile& profile, const VertexId& from);

bool IsDivergent(const Profile& profile, const VertexId& from);

// The lasso when the chosen path from `from` diverges, nullopt otherwise.
std::optional<Cycles> DivergenceWitness(const Profile& profile,
                                        const VertexId& from);

// Throws NotConvergent when the chosen path from `from` is infinite.
UtilityAssignment UtilityOf(const Profile& profile, const VertexId& from);

// ---------------------------------------------------------------------------
// Game bisimilarity.

// True iff the unfoldings of `a` at `va` and `b` at `vb` are the same game:
// leaves carry pointwise-equal assignments, nodes carry the same agent and
// pairwise-bisimilar successors for every choice.
bool SameGame(const Arena& a, const VertexId& va, const Arena& b,
              const VertexId& vb);

bool SameGameProfiles(const Profile& s, const Profile& t);

// ---------------------------------------------------------------------------
// Subgame perfection.

struct SpeOk {
  friend bool operator==(const SpeOk&, const SpeOk&) = default;
};

// A one-shot deviation that strictly improves the mover's utility.
struct SpeViolation {
  ChoiceId deviation;
  Utility chosen_utility = 0;
  Utility deviation_utility = 0;

  friend bool operator==(const SpeViolation&, const SpeViolation&) = default;
};

struct NonConvergentContinuation {
  friend bool operator==(const NonConvergentContinuation&,
                         const NonConvergentContinuation&) = default;
};

using SpeStatus = std::variant<SpeOk, SpeViolation, NonConvergentContinuation>;

struct SpeReport {
  bool verdict = true;
  // One entry per vertex reachable from the root; leaves are always ok.
  std::map<VertexId, SpeStatus> per_vertex;
};

// At every vertex v reachable from the root: the chosen continuation
// converges, and no choice whose continuation converges gives the mover of v
// strictly more. Continuations keep the profile's choices everywhere,
// including at v itself when the path returns to it.
SpeReport IsSpe(const Profile& profile);

// One application of the node rule of subgame perfection: `node` in s is
// backed by `witness` in s2.
struct SpeCertificate {
  VertexId node;
  VertexId witness;
};

struct CertificateCheck {
  bool both_internal = false;
  bool same_game = false;
  bool node_continuation_spe = false;
  bool witness_continuation_spe = false;
  bool node_continuation_converges = false;
  bool witness_continuation_converges = false;
  // The node's mover gets at least as much from the node's continuation as
  // from the witness's.
  bool not_less = false;

  bool holds() const {
    return both_internal && same_game && node_continuation_spe &&
           witness_continuation_spe && node_continuation_converges &&
           witness_continuation_converges && not_less;
  }
};

// Throws ArenaError if either vertex does not resolve.
CertificateCheck CheckSpeCertificate(const SpeCertificate& cert,
                                     const Profile& s, const Profile& s2);

// ---------------------------------------------------------------------------
// Positional universes.

// |choices| ^ |internal vertices|, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> UniverseSize(const Arena& arena);

// Every positional profile over `arena`, ordered lexicographically by
// (vertex id, choice id) with the smallest vertex id most significant.
// Throws UniverseTooLarge when there are more than `cap`.
std::vector<Profile> EnumeratePositionalProfiles(const Arena& arena,
                                                 std::size_t cap);

// The subsequence of EnumeratePositionalProfiles that is subgame perfect.
std::vector<Profile> SpeSet(const Arena& arena, std::size_t cap);

// ---------------------------------------------------------------------------
// Goodness and escalation.

using ChoiceAssignment = std::map<VertexId, ChoiceId>;

struct GoodnessReport {
  bool verdict = true;
  // One entry per internal vertex on the chosen path from the root (stem
  // and cycle). The witness is the first subgame perfect positional profile
  // that makes the same choice there.
  std::map<VertexId, std::optional<ChoiceAssignment>> per_path_vertex;
  std::uint64_t universe = 0;
};

GoodnessReport IsGood(const Profile& profile, std::size_t cap);

struct EscalationReport {
  bool verdict = false;
  GoodnessReport goodness;
  std::optional<Cycles> divergence;
};

EscalationReport IsEscalation(const Profile& profile, std::size_t cap);

}  // namespace infgame

#endif  // INFGAME_ANALYSIS_H_
