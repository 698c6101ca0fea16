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

// Reports printed by the command-line tool. Every renderer is deterministic:
// maps are emitted in key order, so identical inputs give identical bytes.

#ifndef INFGAME_REPORT_H_
#define INFGAME_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <string>

#include "infgame/analysis.h"
#include "infgame/arena.h"

namespace infgame {

struct AnalysisReport {
  std::string source;
  bool convergent = false;
  bool divergent = false;
  bool spe = false;
  bool good = false;
  bool escalation = false;
  PathOutcome path;
  SpeReport spe_report;
  GoodnessReport goodness;
  std::uint64_t universe = 0;
};

// Runs every predicate at the profile's root. Throws UniverseTooLarge.
AnalysisReport Analyze(const Profile& profile, std::string source,
                       std::size_t cap);

std::string RenderText(const AnalysisReport& report);

// Object with `source`, `verdicts`, `witnesses` and `universe`.
std::string RenderJson(const AnalysisReport& report);

// The chosen path unfolded for at most `steps` nodes, one cell per node:
//
//   [1] Alice@alice right ->
//        | down: Alice=0 Bob=1
//   [2] Bob@bob down ->
//   [leaf] stop_bob: Alice=1 Bob=0
//
// Leaves hanging off a cell by a non-chosen edge are listed below it. An
// infinite path ends with a `~ cycle:` line naming the repeating vertices.
std::string RenderTrace(const Profile& profile, int steps);

// Every positional profile with its verdict, then the subgame perfect ones.
// Throws UniverseTooLarge.
std::string RenderSpeSet(const Arena& arena, std::size_t cap);

std::string FormatAssignment(const ChoiceAssignment& assignment);
std::string FormatUtilities(const UtilityAssignment& utilities);

}  // namespace infgame

#endif  // INFGAME_REPORT_H_
