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

#include "infgame/corpus.h"

namespace infgame {
namespace {

// The leaf below Alice's vertex pays (0, 1); the one below Bob's pays (1, 0).
Profile Comb(const char* alice_choice, const char* bob_choice) {
  return BuildComb(AliceBobPayoff(0, 1), AliceBobPayoff(1, 0), alice_choice,
                   bob_choice);
}

Profile LeafProfile(const char* id, Utility alice, Utility bob) {
  Arena arena({kAlice, kBob}, {kDown, kRight});
  arena.AddLeaf(id, AliceBobPayoff(alice, bob));
  arena.SetRoot(id);
  return Profile(std::move(arena), {});
}

Profile OneShot() {
  Arena arena({kAlice, kBob}, {kDown, kRight});
  arena.AddNode("start", kAlice, {{kDown, "pay_alice"}, {kRight, "pay_bob"}});
  arena.AddLeaf("pay_alice", AliceBobPayoff(1, 0));
  arena.AddLeaf("pay_bob", AliceBobPayoff(0, 1));
  arena.SetRoot("start");
  return Profile(std::move(arena), {{"start", kRight}});
}

std::map<std::string, bool> Facts(bool convergent, bool spe, bool good,
                                  bool same_game_as_acbs) {
  return {
      {kFactConvergent, convergent},
      {kFactDivergent, !convergent},
      {kFactSpe, spe},
      {kFactGood, good},
      {kFactEscalation, good && !convergent},
      {kFactSameGameAsAcbs, same_game_as_acbs},
  };
}

}  // namespace

UtilityAssignment AliceBobPayoff(Utility alice, Utility bob) {
  return {{kAlice, alice}, {kBob, bob}};
}

std::vector<std::string> ExampleNames() {
  return {"a1b0", "a0b1", "acbs",  "bsac", "var_acbs",
          "asbc", "acbc", "bcac", "asbs", "one_shot"};
}

NamedExample Example(const std::string& name) {
  //                           convergent spe    good   same game as acbs
  if (name == "a1b0") {
    return {name, LeafProfile("a1b0", 1, 0), Facts(true, true, true, false)};
  }
  if (name == "a0b1") {
    return {name, LeafProfile("a0b1", 0, 1), Facts(true, true, true, false)};
  }
  if (name == "acbs") {
    return {name, Comb(kRight, kDown), Facts(true, true, true, true)};
  }
  if (name == "bsac") {
    return {name, Comb(kRight, kDown).RootedAt(kBobVertex),
            Facts(true, true, true, false)};
  }
  if (name == "var_acbs") {
    return {name, Deviate(Comb(kRight, kDown), kAliceVertex, kDown),
            Facts(true, false, true, true)};
  }
  if (name == "asbc") {
    return {name, Comb(kDown, kRight), Facts(true, true, true, true)};
  }
  if (name == "acbc") {
    return {name, Comb(kRight, kRight), Facts(false, false, true, true)};
  }
  if (name == "bcac") {
    return {name, Comb(kRight, kRight).RootedAt(kBobVertex),
            Facts(false, false, true, false)};
  }
  if (name == "asbs") {
    return {name, Comb(kDown, kDown), Facts(true, false, true, true)};
  }
  if (name == "one_shot") {
    return {name, OneShot(), Facts(true, false, false, false)};
  }
  throw UnknownExample(name);
}

}  // namespace infgame
