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

#include "infgame/analysis.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <utility>

#include "indexed_profile.h"

namespace infgame {

using internal::ChoiceVector;
using internal::IndexedArena;
using internal::kNone;

namespace {

std::string DescribeCount(std::optional<std::uint64_t> count) {
  return count ? std::to_string(*count) : std::string("more than 2^64");
}

// Vertices reachable from `from` along any edge, as a membership mask.
std::vector<bool> ReachableMask(const IndexedArena& arena, int from) {
  std::vector<bool> seen(arena.size(), false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int next : arena.succ[v]) {
      if (!seen[next]) {
        seen[next] = true;
        stack.push_back(next);
      }
    }
  }
  return seen;
}

Utility PayoffOf(const IndexedArena& arena, int leaf, const AgentId& agent) {
  return arena.payoffs(leaf).at(agent);
}

SpeStatus VertexStatus(const IndexedArena& arena, const ChoiceVector& chosen,
                       const std::vector<int>& outcome, int v) {
  if (arena.is_leaf(v)) return SpeOk{};
  if (outcome[v] == kNone) return NonConvergentContinuation{};
  const AgentId& mover = arena.agent(v);
  const Utility chosen_utility = PayoffOf(arena, outcome[v], mover);
  std::optional<SpeViolation> best;
  for (int c = 0; c < static_cast<int>(arena.choices.size()); ++c) {
    if (c == chosen[v]) continue;
    int leaf = outcome[arena.succ[v][c]];
    if (leaf == kNone) continue;
    Utility u = PayoffOf(arena, leaf, mover);
    if (NatGeq(chosen_utility, u)) continue;
    if (!best || u > best->deviation_utility) {
      best = SpeViolation{arena.choices[c], chosen_utility, u};
    }
  }
  if (best) return *best;
  return SpeOk{};
}

bool SpeVerdict(const IndexedArena& arena, const ChoiceVector& chosen,
                int from) {
  std::vector<int> outcome = internal::ResolveOutcomes(arena, chosen);
  std::vector<bool> reachable = ReachableMask(arena, from);
  for (int v = 0; v < arena.size(); ++v) {
    if (!reachable[v]) continue;
    if (!std::holds_alternative<SpeOk>(VertexStatus(arena, chosen, outcome, v)))
      return false;
  }
  return true;
}

ChoiceAssignment ToAssignment(const IndexedArena& arena,
                              const ChoiceVector& chosen) {
  ChoiceAssignment out;
  for (int v = 0; v < arena.size(); ++v) {
    if (chosen[v] != kNone) out.emplace(arena.ids[v], arena.choices[chosen[v]]);
  }
  return out;
}

std::uint64_t CheckedUniverse(const Arena& arena, std::size_t cap) {
  std::optional<std::uint64_t> count = UniverseSize(arena);
  if (!count || *count > cap) throw UniverseTooLarge(count, cap);
  return *count;
}

// Calls `visit` on every positional choice vector in lexicographic order;
// the smallest vertex id is most significant.
template <typename Visit>
void ForEachChoiceVector(const IndexedArena& arena, Visit&& visit) {
  std::vector<int> internal;
  for (int v = 0; v < arena.size(); ++v) {
    if (!arena.is_leaf(v)) internal.push_back(v);
  }
  const int width = static_cast<int>(arena.choices.size());
  ChoiceVector chosen(arena.size(), kNone);
  for (int v : internal) chosen[v] = 0;
  while (true) {
    visit(static_cast<const ChoiceVector&>(chosen));
    int i = static_cast<int>(internal.size()) - 1;
    while (i >= 0 && chosen[internal[i]] == width - 1) {
      chosen[internal[i]] = 0;
      --i;
    }
    if (i < 0) break;
    ++chosen[internal[i]];
  }
}

}  // namespace

UniverseTooLarge::UniverseTooLarge(std::optional<std::uint64_t> count,
                                   std::size_t cap)
    : AnalysisError("positional universe has " + DescribeCount(count) +
                    " profiles, exceeding the cap of " + std::to_string(cap)),
      count_(count),
      cap_(cap) {}

NatGeqDerivation DeriveNatGeq(Utility n, Utility m) {
  // The step rule peels one successor off both sides, so after min(n, m)
  // applications one side is zero and a base rule either closes the
  // derivation or nothing applies.
  const Utility peeled = std::min(n, m);
  n -= peeled;
  m -= peeled;
  NatGeqDerivation d;
  d.depth = peeled + 1;
  if (n == 0 && m == 0) {
    d.holds = true;  // zero >= zero
  } else if (m == 0) {
    d.holds = true;  // suc n >= zero
  } else {
    d.holds = false;  // zero >= suc m has no rule
  }
  return d;
}

bool NatGeq(Utility n, Utility m) { return DeriveNatGeq(n, m).holds; }

PathOutcome IsConvergent(const Profile& profile, const VertexId& from) {
  IndexedArena arena(profile.arena());
  ChoiceVector chosen = internal::IndexChoices(arena, profile);
  auto it = arena.index.find(from);
  if (it == arena.index.end()) throw ArenaError("unknown vertex '" + from + "'");

  std::vector<int> position(arena.size(), -1);
  std::vector<int> walk;
  int v = it->second;
  while (!arena.is_leaf(v) && position[v] < 0) {
    position[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = arena.succ[v][chosen[v]];
  }
  if (arena.is_leaf(v)) {
    Converges c;
    for (int w : walk) c.path.push_back(arena.ids[w]);
    c.path.push_back(arena.ids[v]);
    c.leaf = arena.ids[v];
    c.utilities = arena.payoffs(v);
    return c;
  }
  Cycles lasso;
  for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
    auto& part = i < position[v] ? lasso.stem : lasso.cycle;
    part.push_back(arena.ids[walk[i]]);
  }
  return lasso;
}

std::optional<Cycles> DivergenceWitness(const Profile& profile,
                                        const VertexId& from) {
  PathOutcome outcome = IsConvergent(profile, from);
  if (auto* lasso = std::get_if<Cycles>(&outcome)) return std::move(*lasso);
  return std::nullopt;
}

bool IsDivergent(const Profile& profile, const VertexId& from) {
  return DivergenceWitness(profile, from).has_value();
}

UtilityAssignment UtilityOf(const Profile& profile, const VertexId& from) {
  PathOutcome outcome = IsConvergent(profile, from);
  if (auto* c = std::get_if<Converges>(&outcome)) return c->utilities;
  throw NotConvergent(from);
}

bool SameGame(const Arena& a, const VertexId& va, const Arena& b,
              const VertexId& vb) {
  IndexedArena left(a);
  IndexedArena right(b);
  if (left.choices != right.choices) throw AlphabetMismatch();
  auto start_l = left.index.find(va);
  auto start_r = right.index.find(vb);
  if (start_l == left.index.end()) throw ArenaError("unknown vertex '" + va + "'");
  if (start_r == right.index.end()) throw ArenaError("unknown vertex '" + vb + "'");

  // Explore the vertex pairs reachable in lock step. A pair is locally
  // inconsistent when the labels differ; inconsistency then propagates to
  // every pair that reaches it, which leaves the greatest bisimulation.
  std::map<std::pair<int, int>, int> pair_index;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> predecessors;
  std::vector<bool> bad;
  std::deque<int> frontier;

  auto intern = [&](int l, int r) {
    auto [it, inserted] = pair_index.try_emplace({l, r}, pairs.size());
    if (inserted) {
      pairs.push_back({l, r});
      predecessors.emplace_back();
      bad.push_back(false);
      frontier.push_back(it->second);
    }
    return it->second;
  };

  intern(start_l->second, start_r->second);
  std::vector<int> seeds;
  while (!frontier.empty()) {
    int p = frontier.front();
    frontier.pop_front();
    auto [l, r] = pairs[p];
    if (left.is_leaf(l) || right.is_leaf(r)) {
      bool same = left.is_leaf(l) && right.is_leaf(r) &&
                  left.payoffs(l) == right.payoffs(r);
      if (!same) {
        bad[p] = true;
        seeds.push_back(p);
      }
      continue;
    }
    if (left.agent(l) != right.agent(r)) {
      bad[p] = true;
      seeds.push_back(p);
      continue;
    }
    for (std::size_t c = 0; c < left.choices.size(); ++c) {
      int q = intern(left.succ[l][c], right.succ[r][c]);
      predecessors[q].push_back(p);
    }
  }

  while (!seeds.empty()) {
    int p = seeds.back();
    seeds.pop_back();
    for (int pred : predecessors[p]) {
      if (!bad[pred]) {
        bad[pred] = true;
        seeds.push_back(pred);
      }
    }
  }
  return !bad[0];
}

bool SameGameProfiles(const Profile& s, const Profile& t) {
  return SameGame(UnderlyingGame(s), s.root(), UnderlyingGame(t), t.root());
}

SpeReport IsSpe(const Profile& profile) {
  IndexedArena arena(profile.arena());
  ChoiceVector chosen = internal::IndexChoices(arena, profile);
  std::vector<int> outcome = internal::ResolveOutcomes(arena, chosen);
  std::vector<bool> reachable = ReachableMask(arena, arena.root);
  SpeReport report;
  for (int v = 0; v < arena.size(); ++v) {
    if (!reachable[v]) continue;
    SpeStatus status = VertexStatus(arena, chosen, outcome, v);
    if (!std::holds_alternative<SpeOk>(status)) report.verdict = false;
    report.per_vertex.emplace(arena.ids[v], std::move(status));
  }
  return report;
}

CertificateCheck CheckSpeCertificate(const SpeCertificate& cert,
                                     const Profile& s, const Profile& s2) {
  const Vertex& node = s.arena().At(cert.node);
  const Vertex& witness = s2.arena().At(cert.witness);
  CertificateCheck check;
  check.both_internal = !node.is_leaf() && !witness.is_leaf();
  if (!check.both_internal) return check;

  try {
    check.same_game = SameGame(s.arena(), cert.node, s2.arena(), cert.witness);
  } catch (const AlphabetMismatch&) {
    check.same_game = false;
  }

  const VertexId& next =
      node.internal().successors.at(s.ChosenAt(cert.node));
  const VertexId& next2 =
      witness.internal().successors.at(s2.ChosenAt(cert.witness));
  check.node_continuation_spe = IsSpe(s.RootedAt(next)).verdict;
  check.witness_continuation_spe = IsSpe(s2.RootedAt(next2)).verdict;

  PathOutcome out = IsConvergent(s, next);
  PathOutcome out2 = IsConvergent(s2, next2);
  const auto* conv = std::get_if<Converges>(&out);
  const auto* conv2 = std::get_if<Converges>(&out2);
  check.node_continuation_converges = conv != nullptr;
  check.witness_continuation_converges = conv2 != nullptr;
  if (conv != nullptr && conv2 != nullptr) {
    const AgentId& mover = node.internal().agent;
    auto u = conv->utilities.find(mover);
    auto u2 = conv2->utilities.find(mover);
    check.not_less = u != conv->utilities.end() &&
                     u2 != conv2->utilities.end() &&
                     NatGeq(u->second, u2->second);
  }
  return check;
}

std::optional<std::uint64_t> UniverseSize(const Arena& arena) {
  const std::uint64_t width = std::set<ChoiceId>(arena.choices().begin(),
                                                 arena.choices().end())
                                  .size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < arena.InternalIds().size(); ++i) {
    if (width != 0 && count > std::numeric_limits<std::uint64_t>::max() / width)
      return std::nullopt;
    count *= width;
  }
  return count;
}

std::vector<Profile> EnumeratePositionalProfiles(const Arena& arena,
                                                 std::size_t cap) {
  IndexedArena indexed(arena);
  CheckedUniverse(arena, cap);
  std::vector<Profile> out;
  ForEachChoiceVector(indexed, [&](const ChoiceVector& chosen) {
    out.emplace_back(arena, ToAssignment(indexed, chosen));
  });
  return out;
}

std::vector<Profile> SpeSet(const Arena& arena, std::size_t cap) {
  IndexedArena indexed(arena);
  CheckedUniverse(arena, cap);
  std::vector<Profile> out;
  ForEachChoiceVector(indexed, [&](const ChoiceVector& chosen) {
    if (SpeVerdict(indexed, chosen, indexed.root)) {
      out.emplace_back(arena, ToAssignment(indexed, chosen));
    }
  });
  return out;
}

GoodnessReport IsGood(const Profile& profile, std::size_t cap) {
  IndexedArena arena(profile.arena());
  ChoiceVector chosen = internal::IndexChoices(arena, profile);

  std::vector<int> path;
  {
    std::vector<bool> seen(arena.size(), false);
    int v = arena.root;
    while (!arena.is_leaf(v) && !seen[v]) {
      seen[v] = true;
      path.push_back(v);
      v = arena.succ[v][chosen[v]];
    }
  }

  GoodnessReport report;
  report.universe = CheckedUniverse(profile.arena(), cap);
  std::vector<ChoiceVector> equilibria;
  if (!path.empty()) {
    ForEachChoiceVector(arena, [&](const ChoiceVector& candidate) {
      if (SpeVerdict(arena, candidate, arena.root)) {
        equilibria.push_back(candidate);
      }
    });
  }
  for (int v : path) {
    std::optional<ChoiceAssignment> witness;
    for (const ChoiceVector& eq : equilibria) {
      if (eq[v] == chosen[v]) {
        witness = ToAssignment(arena, eq);
        break;
      }
    }
    if (!witness) report.verdict = false;
    report.per_path_vertex.emplace(arena.ids[v], std::move(witness));
  }
  return report;
}

EscalationReport IsEscalation(const Profile& profile, std::size_t cap) {
  EscalationReport report;
  report.goodness = IsGood(profile, cap);
  report.divergence = DivergenceWitness(profile, profile.root());
  report.verdict = report.goodness.verdict && report.divergence.has_value();
  return report;
}

}  // namespace infgame
