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

// Named two-agent, two-choice profiles over the infinite comb, together with
// the facts each one is known to satisfy.
//
//   acbs      Alice continues, Bob stops (rooted at Alice)
//   bsac      the same profile rooted at Bob
//   var_acbs  acbs with Alice's first choice switched to down
//   asbc      Alice stops, Bob continues
//   acbc      both continue forever; the escalation
//   bcac      acbc rooted at Bob
//   asbs      both stop
//   a1b0      leaf: Alice 1, Bob 0
//   a0b1      leaf: Alice 0, Bob 1
//   one_shot  a single Alice node choosing right, where down is better

#ifndef INFGAME_CORPUS_H_
#define INFGAME_CORPUS_H_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "infgame/arena.h"

namespace infgame {

class UnknownExample : public std::runtime_error {
 public:
  explicit UnknownExample(const std::string& name)
      : std::runtime_error("unknown example '" + name + "'") {}
};

// Keys of NamedExample::expected.
inline constexpr char kFactConvergent[] = "convergent";
inline constexpr char kFactDivergent[] = "divergent";
inline constexpr char kFactSpe[] = "spe";
inline constexpr char kFactGood[] = "good";
inline constexpr char kFactEscalation[] = "escalation";
inline constexpr char kFactSameGameAsAcbs[] = "same_game_as_acbs";

struct NamedExample {
  std::string name;
  Profile profile;
  std::map<std::string, bool> expected;
};

UtilityAssignment AliceBobPayoff(Utility alice, Utility bob);

// Throws UnknownExample.
NamedExample Example(const std::string& name);

std::vector<std::string> ExampleNames();

}  // namespace infgame

#endif  // INFGAME_CORPUS_H_
