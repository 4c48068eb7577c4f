#pragma once

// Plan-comparison vocabulary and the helpers that encode a plan's tasks and
// qualities as tuples.
//
// Vocabulary names are bit-exact strings; they appear verbatim in
// snapshots and narratives.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plancomp/kb.hpp"

namespace plancomp::vocab {

// Classes.
inline constexpr std::string_view kPlan = "Plan";
inline constexpr std::string_view kTask = "Task";
inline constexpr std::string_view kQuality = "Quality";
inline constexpr std::string_view kPlanCost = "PlanCost";
inline constexpr std::string_view kPlanMakespan = "PlanMakespan";
inline constexpr std::string_view kPlanNumberOfTasks = "PlanNumberOfTasks";

// Plan <-> quality.
inline constexpr std::string_view kHasQuality = "hasQuality";
inline constexpr std::string_view kIsQualityOf = "isQualityOf";
inline constexpr std::string_view kHasCost = "hasCost";
inline constexpr std::string_view kIsCostOf = "isCostOf";
inline constexpr std::string_view kHasMakespan = "hasMakespan";
inline constexpr std::string_view kIsMakespanOf = "isMakespanOf";
inline constexpr std::string_view kHasNumberOfTasks = "hasNumberOfTasks";
inline constexpr std::string_view kIsNumberOfTasksOf = "isNumberOfTasksOf";

// Quality <-> quality.
inline constexpr std::string_view kHasBetterQualityValueThan = "hasBetterQualityValueThan";
inline constexpr std::string_view kHasWorseQualityValueThan = "hasWorseQualityValueThan";
inline constexpr std::string_view kHasEquivalentQualityValueThan = "hasEquivalentQualityValueThan";

// Plan <-> plan.
inline constexpr std::string_view kIsCheaperPlanThan = "isCheaperPlanThan";
inline constexpr std::string_view kIsMoreExpensivePlanThan = "isMoreExpensivePlanThan";
inline constexpr std::string_view kIsFasterPlanThan = "isFasterPlanThan";
inline constexpr std::string_view kIsSlowerPlanThan = "isSlowerPlanThan";
inline constexpr std::string_view kIsShorterPlanThan = "isShorterPlanThan";
inline constexpr std::string_view kIsLongerPlanThan = "isLongerPlanThan";
inline constexpr std::string_view kIsBetterPlanThan = "isBetterPlanThan";
inline constexpr std::string_view kIsWorsePlanThan = "isWorsePlanThan";
inline constexpr std::string_view kIsEquivalentPlanTo = "isEquivalentPlanTo";
inline constexpr std::string_view kIsPlanWithSameCostAs = "isPlanWithSameCostAs";
inline constexpr std::string_view kIsPlanWithSameMakespanAs = "isPlanWithSameMakespanAs";
inline constexpr std::string_view kIsPlanWithSameNumberOfTasksAs = "isPlanWithSameNumberOfTasksAs";

// Task sequencing.
inline constexpr std::string_view kDefinesTask = "definesTask";
inline constexpr std::string_view kIsTaskDefinedIn = "isTaskDefinedIn";
inline constexpr std::string_view kDirectlyFollows = "directlyFollows";
inline constexpr std::string_view kDirectlyPrecedes = "directlyPrecedes";

// Data.
inline constexpr std::string_view kHasDataValue = "hasDataValue";

}  // namespace plancomp::vocab

namespace plancomp {

enum class QualityKind { Cost, Makespan, NumberOfTasks };

inline constexpr std::array<QualityKind, 3> kAllQualityKinds = {
    QualityKind::Cost, QualityKind::Makespan, QualityKind::NumberOfTasks};

/// Fixed per-kind vocabulary.
struct QualityKindInfo {
  std::string_view name;             // "cost", also the quality-label suffix
  std::string_view quality_class;    // PlanCost
  std::string_view has_relation;     // hasCost
  std::string_view better_relation;  // isCheaperPlanThan
  std::string_view worse_relation;   // isMoreExpensivePlanThan
  std::string_view same_relation;    // isPlanWithSameCostAs
};

const QualityKindInfo& info(QualityKind kind);
std::optional<QualityKind> quality_kind_from_name(std::string_view name);

PropertyRegistry plan_property_registry();
ClassHierarchy plan_class_hierarchy();

/// An empty KB with the plan vocabulary registered.
KnowledgeGraph make_plan_knowledge_graph();

/// Name of the quality individual a plan gets for `kind`, e.g.
/// "bringing tea cost".
std::string quality_name(const std::string& plan, QualityKind kind);

/// Asserts the plan, its task sequence, and one quality per kind (number of
/// tasks = tasks.size()), all holding over `interval`.
/// Throws DuplicatePlanError, EmptyPlanError or InvalidPlanError.
void assert_plan(KnowledgeGraph& kb, const std::string& name, const std::vector<std::string>& tasks,
                 double cost, double makespan, const Interval& interval = Interval::universal());

bool is_plan(const KnowledgeGraph& kb, const std::string& name);
/// Sorted, deduplicated names of every Plan instance.
std::vector<std::string> plan_names(const KnowledgeGraph& kb);

struct PlanQuality {
  std::string quality;
  QualityKind kind;
  DataValue value;

  friend bool operator==(const PlanQuality&, const PlanQuality&) = default;
};

/// Qualities of `plan` that carry a value, ordered Cost, Makespan,
/// NumberOfTasks. Throws UnknownPlanError.
std::vector<PlanQuality> plan_qualities(const KnowledgeGraph& kb, const std::string& plan);

/// The quality individual of `plan` for `kind`, if any.
std::optional<std::string> find_quality(const KnowledgeGraph& kb, const std::string& plan,
                                        QualityKind kind);

/// Positive tuples <qa, R, qb> from a quality of plan_a to a quality of
/// plan_b, read through inverse views. Throws UnknownPlanError.
std::vector<TimedTuple> quality_relations_between(const KnowledgeGraph& kb, const std::string& plan_a,
                                                  const std::string& plan_b);

/// Every property R with a positive <plan_a, R, plan_b>, directly or through
/// an inverse, sorted. Throws UnknownPlanError.
std::vector<std::string> plan_relations(const KnowledgeGraph& kb, const std::string& plan_a,
                                        const std::string& plan_b);

/// Task labels defined in `plan`, in assertion order.
std::vector<std::string> plan_tasks(const KnowledgeGraph& kb, const std::string& plan);

}  // namespace plancomp
