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

#include "infgame/report.h"

#include <sstream>
#include <utility>

#include "json.hpp"

namespace infgame {
namespace {

using nlohmann::json;

const char* Bool(bool b) { return b ? "true" : "false"; }

std::string JoinIds(const std::vector<VertexId>& ids) {
  std::string out;
  for (const VertexId& id : ids) {
    if (!out.empty()) out += ' ';
    out += id;
  }
  return out;
}

std::string DescribeStatus(const SpeStatus& status) {
  if (std::holds_alternative<SpeOk>(status)) return "ok";
  if (std::holds_alternative<NonConvergentContinuation>(status)) {
    return "chosen continuation does not converge";
  }
  const auto& v = std::get<SpeViolation>(status);
  return "violation: chosen gives " + std::to_string(v.chosen_utility) + ", " +
         v.deviation + " gives " + std::to_string(v.deviation_utility);
}

json PathJson(const PathOutcome& path) {
  if (const auto* c = std::get_if<Converges>(&path)) {
    return {{"kind", "converges"},
            {"path", c->path},
            {"leaf", c->leaf},
            {"utilities", c->utilities}};
  }
  const auto& lasso = std::get<Cycles>(path);
  return {{"kind", "cycles"}, {"stem", lasso.stem}, {"cycle", lasso.cycle}};
}

json SpeJson(const SpeReport& report) {
  json per_vertex = json::object();
  for (const auto& [v, status] : report.per_vertex) {
    if (std::holds_alternative<SpeOk>(status)) {
      per_vertex[v] = {{"status", "ok"}};
    } else if (std::holds_alternative<NonConvergentContinuation>(status)) {
      per_vertex[v] = {{"status", "non_convergent_chosen_continuation"}};
    } else {
      const auto& viol = std::get<SpeViolation>(status);
      per_vertex[v] = {{"status", "violation"},
                       {"deviation", viol.deviation},
                       {"chosen_utility", viol.chosen_utility},
                       {"deviation_utility", viol.deviation_utility}};
    }
  }
  return {{"verdict", report.verdict}, {"per_vertex", per_vertex}};
}

json GoodnessJson(const GoodnessReport& report) {
  json per_vertex = json::object();
  for (const auto& [v, witness] : report.per_path_vertex) {
    per_vertex[v] = witness ? json(*witness) : json(nullptr);
  }
  return {{"verdict", report.verdict}, {"per_path_vertex", per_vertex}};
}

}  // namespace

std::string FormatAssignment(const ChoiceAssignment& assignment) {
  std::string out = "{";
  for (const auto& [v, c] : assignment) {
    if (out.size() > 1) out += ", ";
    out += v + "=" + c;
  }
  return out + "}";
}

std::string FormatUtilities(const UtilityAssignment& utilities) {
  std::string out;
  for (const auto& [agent, u] : utilities) {
    if (!out.empty()) out += ' ';
    out += agent + "=" + std::to_string(u);
  }
  return out;
}

AnalysisReport Analyze(const Profile& profile, std::string source,
                       std::size_t cap) {
  AnalysisReport report;
  report.source = std::move(source);
  report.path = IsConvergent(profile, profile.root());
  report.convergent = std::holds_alternative<Converges>(report.path);
  report.divergent = !report.convergent;
  report.spe_report = IsSpe(profile);
  report.spe = report.spe_report.verdict;
  report.goodness = IsGood(profile, cap);
  report.good = report.goodness.verdict;
  report.escalation = report.good && report.divergent;
  report.universe = report.goodness.universe;
  return report;
}

std::string RenderText(const AnalysisReport& report) {
  std::ostringstream out;
  out << "source: " << report.source << '\n';
  out << "universe: " << report.universe << '\n';
  out << "verdicts:\n";
  out << "  convergent: " << Bool(report.convergent) << '\n';
  out << "  divergent: " << Bool(report.divergent) << '\n';
  out << "  spe: " << Bool(report.spe) << '\n';
  out << "  good: " << Bool(report.good) << '\n';
  out << "  escalation: " << Bool(report.escalation) << '\n';
  if (const auto* c = std::get_if<Converges>(&report.path)) {
    out << "path: converges " << JoinIds(c->path) << " ("
        << FormatUtilities(c->utilities) << ")\n";
  } else {
    const auto& lasso = std::get<Cycles>(report.path);
    out << "path: cycles stem [" << JoinIds(lasso.stem) << "] cycle ["
        << JoinIds(lasso.cycle) << "]\n";
  }
  out << "spe witnesses:\n";
  for (const auto& [v, status] : report.spe_report.per_vertex) {
    out << "  " << v << ": " << DescribeStatus(status) << '\n';
  }
  out << "goodness witnesses:\n";
  for (const auto& [v, witness] : report.goodness.per_path_vertex) {
    out << "  " << v << ": "
        << (witness ? FormatAssignment(*witness) : std::string("none")) << '\n';
  }
  return out.str();
}

std::string RenderJson(const AnalysisReport& report) {
  json doc = {
      {"source", report.source},
      {"universe", report.universe},
      {"verdicts",
       {{"convergent", report.convergent},
        {"divergent", report.divergent},
        {"spe", report.spe},
        {"good", report.good},
        {"escalation", report.escalation}}},
      {"witnesses",
       {{"path", PathJson(report.path)},
        {"spe", SpeJson(report.spe_report)},
        {"goodness", GoodnessJson(report.goodness)}}},
  };
  return doc.dump(2) + "\n";
}

std::string RenderTrace(const Profile& profile, int steps) {
  RequireValid(profile);
  const Arena& arena = profile.arena();
  std::ostringstream out;
  PathOutcome outcome = IsConvergent(profile, profile.root());

  std::vector<VertexId> cells;
  if (const auto* c = std::get_if<Converges>(&outcome)) {
    cells.assign(c->path.begin(), c->path.end() - 1);
  } else {
    const auto& lasso = std::get<Cycles>(outcome);
    cells = lasso.stem;
    while (static_cast<int>(cells.size()) < steps) {
      cells.insert(cells.end(), lasso.cycle.begin(), lasso.cycle.end());
    }
  }
  const bool truncated = static_cast<int>(cells.size()) > steps;
  if (truncated) cells.resize(steps);

  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Internal& node = arena.At(cells[i]).internal();
    const ChoiceId& choice = profile.ChosenAt(cells[i]);
    out << '[' << i + 1 << "] " << node.agent << '@' << cells[i] << ' '
        << choice << " ->\n";
    for (const auto& [c, target] : node.successors) {
      const Vertex& next = arena.At(target);
      if (c == choice || !next.is_leaf()) continue;
      out << "     | " << c << ": " << FormatUtilities(next.leaf().payoffs)
          << '\n';
    }
  }

  if (const auto* c = std::get_if<Converges>(&outcome)) {
    if (truncated) {
      out << "...\n";
    } else {
      out << "[leaf] " << c->leaf << ": " << FormatUtilities(c->utilities)
          << '\n';
    }
  } else {
    out << "~ cycle: " << JoinIds(std::get<Cycles>(outcome).cycle)
        << " (repeats forever)\n";
  }
  return out.str();
}

std::string RenderSpeSet(const Arena& arena, std::size_t cap) {
  std::vector<Profile> universe = EnumeratePositionalProfiles(arena, cap);
  std::vector<const Profile*> equilibria;
  std::ostringstream out;
  out << "universe: " << universe.size() << '\n';
  for (const Profile& p : universe) {
    const bool spe = IsSpe(p).verdict;
    if (spe) equilibria.push_back(&p);
    out << FormatAssignment(p.chosen()) << " spe=" << Bool(spe) << '\n';
  }
  out << "spe-set: " << equilibria.size() << '\n';
  for (const Profile* p : equilibria) {
    out << FormatAssignment(p->chosen()) << '\n';
  }
  return out.str();
}

}  // namespace infgame
