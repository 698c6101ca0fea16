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

#include <random>

#include "gtest/gtest.h"
#include "infgame/analysis.h"
#include "infgame/corpus.h"
#include "testing/random_arena.h"

namespace infgame {
namespace {

Profile AcBs() {
  return BuildComb(AliceBobPayoff(0, 1), AliceBobPayoff(1, 0), kRight, kDown);
}

bool HasDefectContaining(const ValidationResult& r, const std::string& text) {
  for (const Defect& d : r.defects) {
    if (d.message.find(text) != std::string::npos) return true;
  }
  return false;
}

TEST(ValidateTest, CombIsValid) {
  EXPECT_TRUE(Validate(AcBs().arena()).ok());
  EXPECT_TRUE(Validate(AcBs()).ok());
}

TEST(ValidateTest, SingleLeafIsValid) {
  Arena arena({kAlice, kBob}, {kDown, kRight});
  arena.AddLeaf("a1b0", AliceBobPayoff(1, 0)).SetRoot("a1b0");
  EXPECT_TRUE(Validate(arena).ok());
  EXPECT_TRUE(Validate(Profile(arena, {})).ok());
}

TEST(ValidateTest, PartialSuccessorMap) {
  Arena arena({kAlice, kBob}, {kDown, kRight});
  arena.AddNode(kAliceVertex, kAlice, {{kDown, "l"}, {kRight, kBobVertex}});
  arena.AddNode(kBobVertex, kBob, {{kDown, "l"}});
  arena.AddLeaf("l", AliceBobPayoff(0, 0));
  arena.SetRoot(kAliceVertex);
  ValidationResult r = Validate(arena);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(HasDefectContaining(r, "successor map not total for node bob"));
  EXPECT_EQ(r.defects.front().subject, "bob");
}

TEST(ValidateTest, ReportsEveryKindOfDefect) {
  Arena arena({kAlice, kAlice}, {kDown, kDown});
  arena.AddNode("n", "Carol", {{kDown, "nowhere"}, {"up", "l"}});
  arena.AddLeaf("l", {{"Dave", 1}});
  arena.AddLeaf("l", AliceBobPayoff(0, 0));
  arena.SetRoot("missing");
  ValidationResult r = Validate(arena);
  EXPECT_TRUE(HasDefectContaining(r, "duplicate agent 'Alice'"));
  EXPECT_TRUE(HasDefectContaining(r, "duplicate choice 'down'"));
  EXPECT_TRUE(HasDefectContaining(r, "duplicate vertex 'l'"));
  EXPECT_TRUE(HasDefectContaining(r, "unknown agent 'Carol'"));
  EXPECT_TRUE(HasDefectContaining(r, "unknown choice 'up'"));
  EXPECT_TRUE(HasDefectContaining(r, "unknown vertex 'nowhere'"));
  EXPECT_TRUE(HasDefectContaining(r, "assigns unknown agent 'Dave'"));
  EXPECT_TRUE(HasDefectContaining(r, "no utility for agent 'Alice'"));
  EXPECT_TRUE(HasDefectContaining(r, "root refers to unknown vertex"));
}

TEST(ValidateTest, EmptyAlphabetAndMissingRoot) {
  Arena arena({kAlice}, {});
  arena.AddLeaf("l", {{kAlice, 0}});
  ValidationResult r = Validate(arena);
  EXPECT_TRUE(HasDefectContaining(r, "choice alphabet is empty"));
  EXPECT_TRUE(HasDefectContaining(r, "missing root"));
}

TEST(ValidateTest, ProfileChoices) {
  Profile bad(AcBs().arena(), {{kAliceVertex, "up"}, {kLeafAfterBob, kDown}});
  ValidationResult r = Validate(bad);
  EXPECT_TRUE(HasDefectContaining(r, "chooses unknown choice 'up'"));
  EXPECT_TRUE(HasDefectContaining(r, "choice recorded for leaf"));
  EXPECT_TRUE(HasDefectContaining(r, "no choice recorded for node bob"));
  EXPECT_THROW(RequireValid(bad), ArenaError);
}

TEST(UnderlyingGameTest, ErasesChoicesOnly) {
  Arena game = UnderlyingGame(AcBs());
  EXPECT_EQ(game, AcBs().arena());
  EXPECT_EQ(game.InternalIds(), (std::vector<VertexId>{"alice", "bob"}));
  EXPECT_EQ(game.At(kBobVertex).internal().agent, kBob);
  EXPECT_EQ(game.At(kLeafAfterBob).leaf().payoffs, AliceBobPayoff(1, 0));
}

TEST(UnderlyingGameTest, LeafProfileKeepsAssignment) {
  Profile leaf = Example("a1b0").profile;
  Arena game = UnderlyingGame(leaf);
  EXPECT_EQ(game.At(game.root()).leaf().payoffs, AliceBobPayoff(1, 0));
}

TEST(UnderlyingGameTest, DeviationKeepsTheGame) {
  Profile var = Deviate(AcBs(), kAliceVertex, kDown);
  EXPECT_EQ(UnderlyingGame(var), UnderlyingGame(AcBs()));
  EXPECT_TRUE(SameGame(UnderlyingGame(var), var.root(),
                       UnderlyingGame(AcBs()), AcBs().root()));
}

TEST(DeviateTest, SwitchesOneChoice) {
  Profile var = Deviate(AcBs(), kAliceVertex, kDown);
  EXPECT_EQ(var.ChosenAt(kAliceVertex), kDown);
  EXPECT_EQ(var.ChosenAt(kBobVertex), kDown);
  EXPECT_EQ(var, Example("var_acbs").profile);
}

TEST(DeviateTest, IdentityAndInvolution) {
  Profile s = AcBs();
  EXPECT_EQ(Deviate(s, kBobVertex, s.ChosenAt(kBobVertex)), s);
  EXPECT_EQ(Deviate(Deviate(s, kBobVertex, kRight), kBobVertex, kDown), s);
}

TEST(DeviateTest, Errors) {
  EXPECT_THROW(Deviate(AcBs(), "carol", kDown), ArenaError);
  EXPECT_THROW(Deviate(AcBs(), kLeafAfterBob, kDown), ArenaError);
  EXPECT_THROW(Deviate(AcBs(), kAliceVertex, "up"), ArenaError);
}

TEST(BuildCombTest, Shapes) {
  Profile acbs = AcBs();
  EXPECT_EQ(acbs.root(), kAliceVertex);
  const Internal& alice = acbs.arena().At(kAliceVertex).internal();
  EXPECT_EQ(alice.successors.at(kDown), kLeafAfterAlice);
  EXPECT_EQ(alice.successors.at(kRight), kBobVertex);
  EXPECT_EQ(acbs.arena().At(kLeafAfterAlice).leaf().payoffs,
            AliceBobPayoff(0, 1));

  Profile asbs =
      BuildComb(AliceBobPayoff(0, 1), AliceBobPayoff(1, 0), kDown, kDown);
  auto path = std::get<Converges>(IsConvergent(asbs, asbs.root())).path;
  EXPECT_EQ(path, (std::vector<VertexId>{kAliceVertex, kLeafAfterAlice}));
}

TEST(ArenaTest, ReachableFromIsSorted) {
  EXPECT_EQ(AcBs().arena().ReachableFrom(kBobVertex),
            (std::vector<VertexId>{"alice", "bob", "stop_alice", "stop_bob"}));
  EXPECT_EQ(AcBs().arena().ReachableFrom(kLeafAfterBob),
            (std::vector<VertexId>{"stop_bob"}));
}

TEST(ArenaPropertyTest, DeviationStaysValid) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Profile s = testing::RandomProfile(rng);
    ASSERT_TRUE(Validate(s).ok());
    ASSERT_TRUE(Validate(UnderlyingGame(s)).ok());
    for (const VertexId& v : s.arena().InternalIds()) {
      for (const ChoiceId& c : s.arena().choices()) {
        ASSERT_TRUE(Validate(Deviate(s, v, c)).ok());
      }
    }
  }
}

}  // namespace
}  // namespace infgame
