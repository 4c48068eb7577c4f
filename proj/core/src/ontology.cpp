#include "plancomp/ontology.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <fmt/format.h>

namespace plancomp {

namespace {

using namespace vocab;

std::string s(std::string_view v) { return std::string(v); }

constexpr std::array<QualityKindInfo, 3> kKindInfo = {{
    {"cost", kPlanCost, kHasCost, kIsCheaperPlanThan, kIsMoreExpensivePlanThan,
     kIsPlanWithSameCostAs},
    {"makespan", kPlanMakespan, kHasMakespan, kIsFasterPlanThan, kIsSlowerPlanThan,
     kIsPlanWithSameMakespanAs},
    {"number of tasks", kPlanNumberOfTasks, kHasNumberOfTasks, kIsShorterPlanThan,
     kIsLongerPlanThan, kIsPlanWithSameNumberOfTasksAs},
}};

void require_plan(const KnowledgeGraph& kb, const std::string& plan) {
  if (!is_plan(kb, plan)) throw UnknownPlanError(fmt::format("unknown plan '{}'", plan));
}

void require_individual_name(const KnowledgeGraph& kb, const std::string& name) {
  auto ns = kb.namespace_of(name);
  if (ns && *ns != Namespace::Individual)
    throw NamespaceError(fmt::format("'{}' is already used as a non-individual name", name));
}

}  // namespace

const QualityKindInfo& info(QualityKind kind) { return kKindInfo[static_cast<std::size_t>(kind)]; }

std::optional<QualityKind> quality_kind_from_name(std::string_view name) {
  for (QualityKind k : kAllQualityKinds) {
    if (info(k).name == name) return k;
  }
  if (name == "number_of_tasks" || name == "tasks") return QualityKind::NumberOfTasks;
  return std::nullopt;
}

PropertyRegistry plan_property_registry() {
  PropertyRegistry r;
  r.add_inverse(s(kHasQuality), s(kIsQualityOf));
  r.add_inverse(s(kHasCost), s(kIsCostOf));
  r.add_inverse(s(kHasMakespan), s(kIsMakespanOf));
  r.add_inverse(s(kHasNumberOfTasks), s(kIsNumberOfTasksOf));
  for (auto [sub, super] : {std::pair{kHasCost, kHasQuality}, {kHasMakespan, kHasQuality},
                            {kHasNumberOfTasks, kHasQuality}, {kIsCostOf, kIsQualityOf},
                            {kIsMakespanOf, kIsQualityOf}, {kIsNumberOfTasksOf, kIsQualityOf}}) {
    r.add_subproperty(s(sub), s(super));
  }

  r.add_inverse(s(kHasBetterQualityValueThan), s(kHasWorseQualityValueThan));
  r.add_symmetric(s(kHasEquivalentQualityValueThan));

  r.add_inverse(s(kIsCheaperPlanThan), s(kIsMoreExpensivePlanThan));
  r.add_inverse(s(kIsFasterPlanThan), s(kIsSlowerPlanThan));
  r.add_inverse(s(kIsShorterPlanThan), s(kIsLongerPlanThan));
  r.add_inverse(s(kIsBetterPlanThan), s(kIsWorsePlanThan));
  r.add_symmetric(s(kIsEquivalentPlanTo));
  r.add_symmetric(s(kIsPlanWithSameCostAs));
  r.add_symmetric(s(kIsPlanWithSameMakespanAs));
  r.add_symmetric(s(kIsPlanWithSameNumberOfTasksAs));
  r.add_disjoint(s(kIsEquivalentPlanTo), s(kIsBetterPlanThan));
  r.add_disjoint(s(kIsEquivalentPlanTo), s(kIsWorsePlanThan));

  r.add_inverse(s(kDefinesTask), s(kIsTaskDefinedIn));
  r.add_inverse(s(kDirectlyFollows), s(kDirectlyPrecedes));

  r.add_data_property(s(kHasDataValue));
  return r;
}

ClassHierarchy plan_class_hierarchy() {
  ClassHierarchy c;
  c.add_subclass(s(kPlanCost), s(kQuality));
  c.add_subclass(s(kPlanMakespan), s(kQuality));
  c.add_subclass(s(kPlanNumberOfTasks), s(kQuality));
  return c;
}

KnowledgeGraph make_plan_knowledge_graph() {
  return KnowledgeGraph(plan_property_registry(), plan_class_hierarchy());
}

std::string quality_name(const std::string& plan, QualityKind kind) {
  return fmt::format("{} {}", plan, info(kind).name);
}

bool is_plan(const KnowledgeGraph& kb, const std::string& name) {
  return is_instance_of(kb, name, s(kPlan));
}

std::vector<std::string> plan_names(const KnowledgeGraph& kb) {
  std::vector<std::string> out;
  for (auto& inst : instances_of(kb, s(kPlan))) out.push_back(std::move(inst.entity));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void assert_plan(KnowledgeGraph& kb, const std::string& name, const std::vector<std::string>& tasks,
                 double cost, double makespan, const Interval& interval) {
  if (is_plan(kb, name)) throw DuplicatePlanError(fmt::format("plan '{}' already exists", name));
  if (tasks.empty()) throw EmptyPlanError(fmt::format("plan '{}' has no tasks", name));
  if (!std::isfinite(cost) || cost < 0.0)
    throw InvalidPlanError(fmt::format("plan '{}': cost must be >= 0", name));
  if (!std::isfinite(makespan) || makespan < 0.0)
    throw InvalidPlanError(fmt::format("plan '{}': makespan must be >= 0", name));
  if (!interval.valid()) throw InvalidPlanError(fmt::format("plan '{}': invalid interval", name));

  std::unordered_set<std::string> seen;
  for (const auto& task : tasks) {
    if (task.empty()) throw InvalidPlanError(fmt::format("plan '{}': empty task label", name));
    if (!seen.insert(task).second)
      throw InvalidPlanError(fmt::format("plan '{}': task '{}' appears twice", name, task));
    require_individual_name(kb, task);
  }
  require_individual_name(kb, name);
  for (QualityKind k : kAllQualityKinds) require_individual_name(kb, quality_name(name, k));

  auto put = [&](std::string subject, std::string_view property, Term object) {
    kb.assert_tuple(TimedTuple{std::move(subject), s(property), std::move(object), interval,
                               Sign::Positive});
  };

  put(name, kType, s(kPlan));
  for (const auto& task : tasks) {
    put(task, kType, s(kTask));
    put(name, kDefinesTask, task);
  }
  for (std::size_t i = 0; i + 1 < tasks.size(); ++i) {
    put(tasks[i + 1], kDirectlyFollows, tasks[i]);
    put(tasks[i], kDirectlyPrecedes, tasks[i + 1]);
  }

  const std::array<double, 3> values = {cost, makespan, static_cast<double>(tasks.size())};
  for (QualityKind k : kAllQualityKinds) {
    const auto& ki = info(k);
    const std::string q = quality_name(name, k);
    put(q, kType, s(ki.quality_class));
    put(name, ki.has_relation, q);
    put(q, kHasDataValue, DataValue::number(values[static_cast<std::size_t>(k)]));
  }
}

std::optional<std::string> find_quality(const KnowledgeGraph& kb, const std::string& plan,
                                        QualityKind kind) {
  TriplePattern pattern{.subject = plan, .property = s(info(kind).has_relation),
                        .sign = Sign::Positive};
  for (const auto& t : query_entailed(kb, pattern)) {
    if (t.object.is_entity()) return t.object.name();
  }
  return std::nullopt;
}

std::vector<PlanQuality> plan_qualities(const KnowledgeGraph& kb, const std::string& plan) {
  require_plan(kb, plan);
  std::vector<PlanQuality> out;
  for (QualityKind k : kAllQualityKinds) {
    auto q = find_quality(kb, plan, k);
    if (!q) continue;
    auto values = kb.query(TriplePattern{.subject = *q, .property = s(kHasDataValue),
                                         .sign = Sign::Positive});
    if (values.empty()) continue;
    out.push_back(PlanQuality{*q, k, values.front().object.value()});
  }
  return out;
}

std::vector<TimedTuple> quality_relations_between(const KnowledgeGraph& kb,
                                                  const std::string& plan_a,
                                                  const std::string& plan_b) {
  require_plan(kb, plan_a);
  require_plan(kb, plan_b);
  auto qualities_of = [&](const std::string& plan) {
    std::vector<std::string> qs;
    TriplePattern p{.subject = plan, .property = s(kHasQuality), .sign = Sign::Positive};
    for (const auto& t : query_entailed(kb, p)) {
      if (t.object.is_entity()) qs.push_back(t.object.name());
    }
    return qs;
  };
  const auto qa = qualities_of(plan_a);
  const auto qb = qualities_of(plan_b);
  std::vector<TimedTuple> out;
  std::unordered_set<TimedTuple, TimedTupleHash> seen;
  for (const auto& a : qa) {
    TriplePattern p{.subject = a, .sign = Sign::Positive};
    for (auto& t : query_entailed(kb, p)) {
      if (!t.object.is_entity()) continue;
      if (std::find(qb.begin(), qb.end(), t.object.name()) == qb.end()) continue;
      if (t.property == kIsQualityOf || kb.registry().is_subproperty(t.property, s(kIsQualityOf)))
        continue;
      if (seen.insert(t).second) out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<std::string> plan_relations(const KnowledgeGraph& kb, const std::string& plan_a,
                                        const std::string& plan_b) {
  require_plan(kb, plan_a);
  require_plan(kb, plan_b);
  std::vector<std::string> out;
  TriplePattern p{.subject = plan_a, .object = Term(plan_b), .sign = Sign::Positive};
  for (const auto& t : query_entailed(kb, p)) {
    if (std::find(out.begin(), out.end(), t.property) == out.end()) out.push_back(t.property);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> plan_tasks(const KnowledgeGraph& kb, const std::string& plan) {
  std::vector<std::string> out;
  TriplePattern p{.subject = plan, .property = s(kDefinesTask), .sign = Sign::Positive};
  for (const auto& t : query_entailed(kb, p)) {
    if (std::find(out.begin(), out.end(), t.object.name()) == out.end())
      out.push_back(t.object.name());
  }
  return out;
}

}  // namespace plancomp
