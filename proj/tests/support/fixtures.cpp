#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plancomp/inference.hpp"
#include "plancomp/ontology.hpp"

namespace plancomp::test {

namespace {

void put(KnowledgeGraph& kb, const std::string& s, const std::string& p, Term o) {
  kb.assert_tuple(TimedTuple{s, p, std::move(o), Interval::universal(), Sign::Positive});
}

}  // namespace

KnowledgeGraph running_example_kb() {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  put(kb, kTea, "type", "Plan");
  put(kb, kCola, "type", "Plan");
  put(kb, "tea cost", "type", "PlanCost");
  put(kb, "cola cost", "type", "PlanCost");
  for (const char* task : {"T2-grasp object", "task 0 - find person", "T3-go to waypoint",
                           "T5-give object", "T7-give object", "T3-got to waypoint"}) {
    put(kb, task, "type", "Task");
  }

  put(kb, kTea, "isBetterPlanThan", kCola);
  put(kb, kTea, "definesTask", "T2-grasp object");
  put(kb, kTea, "definesTask", "task 0 - find person");
  put(kb, kCola, "definesTask", "task 0 - find person");
  put(kb, "T3-go to waypoint", "directlyPrecedes", "T5-give object");
  put(kb, "T7-give object", "isTaskDefinedIn", kCola);
  put(kb, kTea, "definesTask", "T3-got to waypoint");
  put(kb, kTea, "definesTask", "T5-give object");
  put(kb, "T3-go to waypoint", "directlyFollows", "T2-grasp object");
  put(kb, kTea, "isCheaperPlanThan", kCola);
  put(kb, kCola, "hasCost", "cola cost");
  put(kb, kTea, "hasCost", "tea cost");
  put(kb, "cola cost", "hasDataValue", DataValue::number(59));
  put(kb, "tea cost", "hasDataValue", DataValue::number(27));
  put(kb, "cola cost", "hasWorseQualityValueThan", "tea cost");
  return kb;
}

std::vector<std::string> tea_tasks() {
  return {"T0-find person", "T1-go to kitchen", "T2-grasp object",
          "T3-go to waypoint", "T4-find person", "T5-give object"};
}

std::vector<std::string> cola_tasks() {
  return {"T0-find person",  "T1-go to fridge",   "T2-open fridge", "T3-grasp object",
          "T4-close fridge", "T5-go to waypoint", "T6-find person", "T7-give object"};
}

KnowledgeGraph drinks_kb(bool inferred) {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  assert_plan(kb, kTea, tea_tasks(), 27, 27);
  assert_plan(kb, kCola, cola_tasks(), 59, 59);
  if (inferred) compare_all_plans(kb);
  return kb;
}

InstantiatedPair drinks_pair() {
  return InstantiatedPair{{kCola, Interval::universal()}, {kTea, Interval::universal()}};
}

std::string normalize_ws(const std::string& s) {
  std::istringstream in(s);
  std::string out;
  for (std::string w; in >> w;) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

SyntheticPair make_synthetic_pair(std::mt19937& rng, const std::string& tag, std::size_t min_tasks,
                                  std::size_t max_tasks, double min_shared, double max_shared) {
  std::uniform_int_distribution<std::size_t> size(min_tasks, max_tasks);
  std::uniform_real_distribution<double> fraction(min_shared, max_shared);
  std::size_t na = 0;
  std::size_t nb = 0;
  do {
    na = size(rng);
    nb = size(rng);
  } while (static_cast<double>(std::min(na, nb)) <
           std::ceil(min_shared * static_cast<double>(std::max(na, nb))));
  const std::size_t shorter = std::min(na, nb);
  const std::size_t longer = std::max(na, nb);
  std::size_t shared =
      static_cast<std::size_t>(std::ceil(fraction(rng) * static_cast<double>(longer)));
  shared = std::clamp<std::size_t>(shared, 1, shorter);

  std::vector<std::string> common;
  for (std::size_t i = 0; i < shared; ++i) common.push_back(tag + " shared step " + std::to_string(i));

  auto build = [&](const std::string& side, std::size_t n) {
    std::vector<std::string> own;
    for (std::size_t i = 0; i < n - shared; ++i)
      own.push_back(tag + " " + side + " step " + std::to_string(i));
    // Interleave while keeping the shared steps in their common order.
    std::vector<bool> slots(n, false);
    std::fill(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(shared), true);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<std::string> tasks;
    std::size_t ci = 0;
    std::size_t oi = 0;
    for (bool is_common : slots) tasks.push_back(is_common ? common[ci++] : own[oi++]);
    return tasks;
  };

  std::uniform_int_distribution<int> duration(1, 10);
  auto plan = [&](const std::string& side, std::size_t n) {
    SyntheticPlan p;
    p.name = tag + " plan " + side;
    p.tasks = build(side, n);
    for (std::size_t i = 0; i < n; ++i) p.cost += duration(rng);
    p.makespan = p.cost;
    return p;
  };
  SyntheticPair out{plan("a", na), plan("b", nb), shared};
  return out;
}

KnowledgeGraph synthetic_kb(const SyntheticPair& pair) {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  assert_plan(kb, pair.a.name, pair.a.tasks, pair.a.cost, pair.a.makespan);
  assert_plan(kb, pair.b.name, pair.b.tasks, pair.b.cost, pair.b.makespan);
  compare_all_plans(kb);
  return kb;
}

KnowledgeGraph random_plan_kb(std::mt19937& rng, std::size_t max_plans, std::size_t max_tasks) {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  std::uniform_int_distribution<std::size_t> plans(2, max_plans);
  std::uniform_int_distribution<std::size_t> tasks(1, max_tasks);
  std::uniform_int_distribution<int> value(1, 4);
  std::uniform_int_distribution<int> pool(0, static_cast<int>(max_tasks) * 2);
  const std::size_t n = plans(rng);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> labels;
    const std::size_t k = tasks(rng);
    while (labels.size() < k) {
      std::string label = "task " + std::to_string(pool(rng));
      if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(label);
    }
    assert_plan(kb, "plan " + std::to_string(i), labels, value(rng), value(rng));
  }
  return kb;
}

Interval random_interval(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> point(0, 20);
  int a = point(rng);
  int b = point(rng);
  if (a > b) std::swap(a, b);
  switch (kind(rng)) {
    case 0:
      return Interval::universal();
    case 1:
      return Interval{TimePoint::undetermined(), TimePoint::at(b)};
    case 2:
      return Interval{TimePoint::at(a), TimePoint::infinity()};
    default:
      return Interval::between(a, b);
  }
}

}  // namespace plancomp::test
