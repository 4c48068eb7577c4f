#pragma once

// Temporal plan traces and plan manifests.
//
// Trace grammar, one action per line:
//
//   <start>: (<token> <token> ...) [<duration>]
//
// Blank lines and lines starting with `;` are skipped.
//
// Manifest (JSON):
//
//   {"plans": [{"name": "bringing tea", "trace": "tea.plan",
//               "cost": 27, "makespan": 27}]}
//
// `cost` and `makespan` are optional overrides. Trace paths are resolved
// against the manifest's directory.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "plancomp/kb.hpp"

namespace plancomp {

struct TimedAction {
  double start = 0.0;
  std::string label;  // "find person r"
  double duration = 0.0;

  friend bool operator==(const TimedAction&, const TimedAction&) = default;
};

struct PlanDescription {
  std::string name;
  std::vector<TimedAction> actions;  // sorted by start, stable
  double cost = 0.0;
  double makespan = 0.0;

  /// Task labels `T<i>-<label>`, i 0-based.
  std::vector<std::string> task_labels() const;

  friend bool operator==(const PlanDescription&, const PlanDescription&) = default;
};

/// Throws ParseError (1-based line) or EmptyPlanError.
PlanDescription parse_plan_trace(const std::string& text, const std::string& plan_name);

/// Trace lines for `pd`, parseable by parse_plan_trace.
std::string render_plan_trace(const PlanDescription& pd);

/// Parses a manifest; trace paths are read relative to `base_dir`.
/// Throws ManifestError whose field() is a path such as `plans[1].trace`.
std::vector<PlanDescription> load_manifest(const std::string& text,
                                           const std::filesystem::path& base_dir);
std::vector<PlanDescription> load_manifest_file(const std::filesystem::path& path);

/// assert_plan with the ordered task labels over (_, Inf).
void ingest_plan(KnowledgeGraph& kb, const PlanDescription& pd);

}  // namespace plancomp
