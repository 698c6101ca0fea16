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

// infgame: analyze regular infinite games and strategy profiles.
//
// Exit codes: 0 the command succeeded (for `check`, the property holds),
// 1 the checked property fails, 2 usage, parse or analysis error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "infgame/analysis.h"
#include "infgame/corpus.h"
#include "infgame/gamespec.h"
#include "infgame/report.h"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --cap wins, then GAME_CAP, then the default.
std::size_t ResolveCap(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("GAME_CAP");
  if (env == nullptr || *env == '\0') return infgame::kDefaultCap;
  std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos ||
      text.size() > 18) {
    throw UsageError("GAME_CAP must be a natural number, got '" + text + "'");
  }
  return static_cast<std::size_t>(std::stoull(text));
}

infgame::Profile Load(const std::string& path) {
  try {
    return infgame::ParseGameFile(path);
  } catch (const infgame::ParseError& e) {
    if (e.line() == 0) throw UsageError(e.message());
    throw UsageError(path + ":" + e.what());
  }
}

int Analyze(const infgame::Profile& profile, const std::string& source,
            bool json, std::size_t cap) {
  infgame::AnalysisReport report = infgame::Analyze(profile, source, cap);
  std::cout << (json ? infgame::RenderJson(report)
                     : infgame::RenderText(report));
  return kHolds;
}

int Check(const infgame::Profile& profile, const std::string& prop,
          std::size_t cap) {
  bool holds = false;
  if (prop == "conv") {
    holds = !infgame::IsDivergent(profile, profile.root());
  } else if (prop == "div") {
    holds = infgame::IsDivergent(profile, profile.root());
  } else if (prop == "spe") {
    holds = infgame::IsSpe(profile).verdict;
  } else if (prop == "good") {
    holds = infgame::IsGood(profile, cap).verdict;
  } else {
    holds = infgame::IsEscalation(profile, cap).verdict;
  }
  std::cout << prop << ": " << (holds ? "holds" : "fails") << '\n';
  return holds ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze regular infinite games and strategy profiles"};
  app.require_subcommand(1);

  std::string path;
  std::string name;
  std::string prop;
  bool json = false;
  bool emit = false;
  int steps = 0;
  std::optional<std::size_t> cap;

  auto* analyze = app.add_subcommand("analyze", "Report every verdict");
  analyze->add_option("file", path, ".game document")->required();
  analyze->add_flag("--json", json, "Machine-readable output");
  analyze->add_option("--cap", cap, "Positional universe cap");

  auto* check = app.add_subcommand("check", "Exit 0 iff a property holds");
  check->add_option("file", path, ".game document")->required();
  check->add_option("--prop", prop, "Property to check")
      ->required()
      ->check(CLI::IsMember({"conv", "div", "spe", "good", "esc"}));
  check->add_option("--cap", cap, "Positional universe cap");

  auto* trace = app.add_subcommand("trace", "Unfold the chosen path");
  trace->add_option("file", path, ".game document")->required();
  trace->add_option("--steps", steps, "Cells to draw")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* spe_set = app.add_subcommand("spe-set", "List positional SPEs");
  spe_set->add_option("file", path, ".game document")->required();
  spe_set->add_option("--cap", cap, "Positional universe cap");

  auto* example = app.add_subcommand("example", "Built-in named profiles");
  example->add_option("name", name, "Example name")->required();
  example->add_flag("--emit", emit, "Print the .game document instead");
  example->add_flag("--json", json, "Machine-readable output");
  example->add_option("--cap", cap, "Positional universe cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*analyze) return Analyze(Load(path), path, json, ResolveCap(cap));
    if (*check) return Check(Load(path), prop, ResolveCap(cap));
    if (*trace) {
      std::cout << infgame::RenderTrace(Load(path), steps);
      return kHolds;
    }
    if (*spe_set) {
      std::cout << infgame::RenderSpeSet(Load(path).arena(), ResolveCap(cap));
      return kHolds;
    }
    if (*example) {
      infgame::NamedExample ex = infgame::Example(name);
      if (emit) {
        std::cout << infgame::SerializeGame(ex.profile);
        return kHolds;
      }
      return Analyze(ex.profile, name, json, ResolveCap(cap));
    }
  } catch (const std::exception& e) {
    std::cerr << "infgame: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
