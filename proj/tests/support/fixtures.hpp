#pragma once

// Shared KBs and generators for the test binaries.

#include <random>
#include <string>
#include <vector>

#include "plancomp/acxon.hpp"
#include "plancomp/kb.hpp"

namespace plancomp::test {

inline const std::string kTea = "bringing tea";
inline const std::string kCola = "bringing cola";

/// The drinks example as a hand-built KB: the tuples of the narrative
/// walk-through in listing order, plus class memberships.
KnowledgeGraph running_example_kb();

/// The drinks plans asserted through assert_plan (tea: 6 tasks, 27, 27;
/// cola: 8 tasks, 59, 59), optionally followed by compare_all_plans.
KnowledgeGraph drinks_kb(bool inferred);
std::vector<std::string> tea_tasks();
std::vector<std::string> cola_tasks();

/// The (cola, tea) pair over (_, Inf).
InstantiatedPair drinks_pair();

inline const std::string kGoldenNarrative =
    "`bringing tea' is better plan than and is cheaper plan than `bringing cola'. "
    "`bringing tea' includes task `T2-grasp object' and `T3-got to waypoint' and "
    "`T5-give object', while `bringing cola' includes task `T7-give object'. "
    "`bringing cola' has cost `cola cost', which has a higher value than `tea cost'; "
    "while `bringing tea' has cost `tea cost'. "
    "`cola cost' has value `59', while `tea cost' has value `27'. "
    "`T3-go to waypoint' directly precedes `T5-give object', and `T2-grasp object' "
    "directly precedes `T3-go to waypoint'.";

inline const std::string kGoldenRestricted =
    "`bringing tea' is better plan than and is cheaper plan than `bringing cola'. "
    "`bringing cola' has cost `cola cost', which has a higher value than `tea cost'; "
    "while `bringing tea' has cost `tea cost'. "
    "`cola cost' has value `59', while `tea cost' has value `27'.";

/// Collapses whitespace runs to single spaces and trims.
std::string normalize_ws(const std::string& s);

struct SyntheticPlan {
  std::string name;
  std::vector<std::string> tasks;
  double cost = 0.0;
  double makespan = 0.0;
};

struct SyntheticPair {
  SyntheticPlan a;
  SyntheticPlan b;
  std::size_t shared = 0;
};

/// Two plans of min_tasks..max_tasks tasks. Sizes are redrawn until the
/// shorter plan can hold min_shared of the longer one. The shared count is a
/// fraction in [min_shared, max_shared] of the longer plan's tasks, capped at
/// the shorter plan's size, so both plans share at least min_shared of their
/// tasks. `tag` keeps names unique across pairs.
SyntheticPair make_synthetic_pair(std::mt19937& rng, const std::string& tag,
                                  std::size_t min_tasks = 5, std::size_t max_tasks = 50,
                                  double min_shared = 0.3, double max_shared = 0.8);

/// A fresh plan KB holding the pair, inferred.
KnowledgeGraph synthetic_kb(const SyntheticPair& pair);

/// 2..max_plans plans with 1..max_tasks tasks and small integer qualities
/// (ties likely), not inferred. Tasks are drawn from a shared pool.
KnowledgeGraph random_plan_kb(std::mt19937& rng, std::size_t max_plans = 4,
                              std::size_t max_tasks = 20);

Interval random_interval(std::mt19937& rng);

}  // namespace plancomp::test
