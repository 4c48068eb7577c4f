#pragma once

// Quality-comparison and plan-dominance rules.

#include <array>
#include <string>
#include <vector>

#include "plancomp/kb.hpp"
#include "plancomp/ontology.hpp"

namespace plancomp {

enum class Polarity { LowerIsBetter, HigherIsBetter };

enum class Verdict { Better, Worse, Equivalent, Undecided };

std::string_view to_string(Verdict v);

struct InferenceConfig {
  /// Indexed by QualityKind.
  std::array<Polarity, 3> polarity = {Polarity::LowerIsBetter, Polarity::LowerIsBetter,
                                      Polarity::LowerIsBetter};
  /// |a - b| <= tolerance counts as equal. 0 means exact.
  double equality_tolerance = 0.0;

  Polarity polarity_of(QualityKind k) const { return polarity[static_cast<std::size_t>(k)]; }

  /// Parses `key=value` lines: `polarity.<kind>` (lower|higher, kind one of
  /// cost, makespan, number_of_tasks) and `equality_tolerance`. `#` starts a
  /// comment. Throws ParseError.
  static InferenceConfig parse(const std::string& text);
};

/// Outcome of comparing one quality kind between two plans.
enum class QualityOrder { ABetter, AWorse, Equal };

/// Compares the `kind` qualities of plan_a and plan_b and asserts the
/// quality-level relation and the plan-level relation, each with its
/// inverse, over (_, Inf). Idempotent.
/// Throws UnknownPlanError, MissingQualityError or NonNumericValueError.
QualityOrder compare_quality_pair(KnowledgeGraph& kb, const std::string& plan_a,
                                  const std::string& plan_b, QualityKind kind,
                                  Polarity polarity = Polarity::LowerIsBetter,
                                  double equality_tolerance = 0.0);

struct DominanceOutcome {
  Verdict verdict = Verdict::Undecided;
  std::vector<std::string> warnings;
};

/// Reads the quality relations between the two plans and asserts the
/// all-qualities verdict (mirrored). Undecided asserts nothing.
/// Throws UnknownPlanError or NoComparedQualitiesError.
DominanceOutcome infer_plan_dominance(KnowledgeGraph& kb, const std::string& plan_a,
                                      const std::string& plan_b);

struct PairResult {
  std::string plan_a;
  std::string plan_b;
  Verdict verdict = Verdict::Undecided;
  std::vector<std::string> warnings;
};

struct PairError {
  std::string plan_a;
  std::string plan_b;
  std::string message;
};

struct ComparisonReport {
  std::vector<PairResult> pairs;
  std::vector<PairError> errors;
};

/// Runs the quality comparisons for every shared kind and the dominance
/// rule for every unordered pair of plans, in sorted pair order. A failing
/// pair is recorded in `errors` and the rest still run.
ComparisonReport compare_all_plans(KnowledgeGraph& kb, const InferenceConfig& config = {});

}  // namespace plancomp
