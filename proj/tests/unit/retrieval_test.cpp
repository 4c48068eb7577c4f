#include <algorithm>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "plancomp/acxon.hpp"
#include "plancomp/ontology.hpp"

namespace {

using namespace plancomp;
using test::kCola;
using test::kTea;

TimedTuple pos(const std::string& s, const std::string& p, Term o) {
  return TimedTuple{s, p, std::move(o), Interval::universal(), Sign::Positive};
}

// The fifteen walk-through tuples, in listing order.
std::vector<TimedTuple> listing() {
  return {pos(kTea, "isBetterPlanThan", kCola),
          pos(kTea, "definesTask", "T2-grasp object"),
          pos(kTea, "definesTask", "task 0 - find person"),
          pos(kCola, "definesTask", "task 0 - find person"),
          pos("T3-go to waypoint", "directlyPrecedes", "T5-give object"),
          pos("T7-give object", "isTaskDefinedIn", kCola),
          pos(kTea, "definesTask", "T3-got to waypoint"),
          pos(kTea, "definesTask", "T5-give object"),
          pos("T3-go to waypoint", "directlyFollows", "T2-grasp object"),
          pos(kTea, "isCheaperPlanThan", kCola),
          pos(kCola, "hasCost", "cola cost"),
          pos(kTea, "hasCost", "tea cost"),
          pos("cola cost", "hasDataValue", DataValue::number(59)),
          pos("tea cost", "hasDataValue", DataValue::number(27)),
          pos("cola cost", "hasWorseQualityValueThan", "tea cost")};
}

// Same tuple up to inverse orientation.
bool same_fact(const KnowledgeGraph& kb, const TimedTuple& a, const TimedTuple& b) {
  return a == b || (can_invert(kb, b) && a == invert_tuple(kb, b));
}

bool same_facts(const KnowledgeGraph& kb, const std::vector<TimedTuple>& got,
                const std::vector<TimedTuple>& want) {
  if (got.size() != want.size()) return false;
  return std::all_of(want.begin(), want.end(), [&](const TimedTuple& w) {
    return std::any_of(got.begin(), got.end(), [&](const TimedTuple& g) { return same_fact(kb, g, w); });
  });
}

TEST(InstantiatedPairs, SortedUniqueAndWithinLocality) {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  kb.assert_tuple({"p2", "type", "Plan", Interval::between(0, 10), Sign::Positive});
  kb.assert_tuple({"p1", "type", "Plan", Interval::between(5, 15), Sign::Positive});
  kb.assert_tuple({"p3", "type", "Plan", Interval::between(20, 30), Sign::Positive});
  const auto all = retrieve_instantiated_pairs(kb, {{"Plan", "Plan"}}, Interval::universal());
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].a.entity, "p1");
  EXPECT_EQ(all[0].b.entity, "p2");
  EXPECT_EQ(all[0].a.interval, Interval::between(5, 15));
  EXPECT_EQ(retrieve_instantiated_pairs(kb, {{"Plan", "Plan"}}, Interval::between(0, 12)).size(), 1u);
  EXPECT_TRUE(retrieve_instantiated_pairs(kb, {{"Plan", "Task"}}, Interval::universal()).empty());
}

TEST(RetrieveNarrativeTuples, LevelOneIsThePairTuples) {
  const auto kb = test::running_example_kb();
  const auto t_p = retrieve_narrative_tuples(kb, test::drinks_pair(), Specificity::Level1);
  EXPECT_TRUE(same_facts(kb, t_p, {pos(kTea, "isBetterPlanThan", kCola),
                                   pos(kTea, "isCheaperPlanThan", kCola)}));
}

TEST(RetrieveNarrativeTuples, LevelThreeIsTheListing) {
  const auto kb = test::running_example_kb();
  const auto t_p = retrieve_narrative_tuples(kb, test::drinks_pair(), Specificity::Level3);
  EXPECT_EQ(t_p.size(), 15u);
  EXPECT_TRUE(same_facts(kb, t_p, listing()));
}

TEST(RetrieveNarrativeTuples, RestrictToQuality) {
  const auto kb = test::running_example_kb();
  const auto t_p =
      retrieve_narrative_tuples(kb, test::drinks_pair(), Specificity::Level3, "Quality");
  const auto l = listing();
  EXPECT_TRUE(same_facts(kb, t_p, {l[0], l[9], l[10], l[11], l[12], l[13], l[14]}));
}

TEST(RetrieveNarrativeTuples, NeverRetrievesTypeTuplesOrInversePairs) {
  const auto kb = test::drinks_kb(true);
  const auto t_p = retrieve_narrative_tuples(kb, test::drinks_pair(), Specificity::Level3);
  for (const auto& t : t_p) {
    EXPECT_NE(t.property, "type");
    if (!can_invert(kb, t)) continue;
    const auto inv = invert_tuple(kb, t);
    if (inv == t) continue;
    EXPECT_EQ(std::count(t_p.begin(), t_p.end(), inv), 0);
  }
}

TEST(RetrieveNarrativeTuples, LevelThreeHonoursInstanceIntervals) {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  kb.assert_tuple({"a", "type", "Plan", Interval::between(0, 10), Sign::Positive});
  kb.assert_tuple({"b", "type", "Plan", Interval::between(0, 10), Sign::Positive});
  kb.assert_tuple({"a", "definesTask", "ta", Interval::between(0, 10), Sign::Positive});
  kb.assert_tuple({"ta", "directlyPrecedes", "early", Interval::between(2, 3), Sign::Positive});
  kb.assert_tuple({"ta", "directlyPrecedes", "late", Interval::between(50, 60), Sign::Positive});
  const InstantiatedPair pair{{"a", Interval::between(0, 10)}, {"b", Interval::between(0, 10)}};
  const auto t_p = retrieve_narrative_tuples(kb, pair, Specificity::Level3);
  auto mentions = [&](const std::string& n) {
    return std::any_of(t_p.begin(), t_p.end(), [&](const TimedTuple& t) {
      return t.subject == n || t.object_is(n);
    });
  };
  EXPECT_TRUE(mentions("early"));
  EXPECT_FALSE(mentions("late"));
}

TEST(ExtractDivergentTuples, PrunesTheSharedTaskBranch) {
  const auto kb = test::running_example_kb();
  const auto pair = test::drinks_pair();
  const auto d_p =
      extract_divergent_tuples(kb, retrieve_narrative_tuples(kb, pair, Specificity::Level3), pair);
  auto want = listing();
  want.erase(want.begin() + 2, want.begin() + 4);
  EXPECT_EQ(d_p.size(), 13u);
  EXPECT_TRUE(same_facts(kb, d_p, want));
}

TEST(ExtractDivergentTuples, BranchPruningIsTransitive) {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  const InstantiatedPair pair{{"a", Interval::universal()}, {"b", Interval::universal()}};
  const std::vector<TimedTuple> t_p = {
      pos("a", "definesTask", "shared"), pos("b", "definesTask", "shared"),
      pos("shared", "directlyPrecedes", "next"), pos("next", "directlyPrecedes", "last"),
      pos("a", "definesTask", "own")};
  const auto d_p = extract_divergent_tuples(kb, t_p, pair);
  ASSERT_EQ(d_p.size(), 1u);
  EXPECT_TRUE(d_p[0].object_is("own"));
}

TEST(ExtractDivergentTuples, DifferentIntervalsOrSignsDiverge) {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  const InstantiatedPair pair{{"a", Interval::universal()}, {"b", Interval::universal()}};
  const std::vector<TimedTuple> t_p = {
      pos("a", "definesTask", "x"),
      TimedTuple{"b", "definesTask", Term("x"), Interval::between(1, 2), Sign::Positive},
      pos("a", "definesTask", "y"),
      TimedTuple{"b", "definesTask", Term("y"), Interval::universal(), Sign::Negative}};
  EXPECT_EQ(extract_divergent_tuples(kb, t_p, pair), t_p);
}

TEST(ExtractDivergentTuples, ComparesInstanceObjectsInverted) {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  const InstantiatedPair pair{{"a", Interval::universal()}, {"b", Interval::universal()}};
  const std::vector<TimedTuple> t_p = {pos("shared", "isTaskDefinedIn", "a"),
                                       pos("b", "definesTask", "shared")};
  EXPECT_TRUE(extract_divergent_tuples(kb, t_p, pair).empty());
}

TEST(Specificity, FromInt) {
  EXPECT_EQ(specificity_from_int(2), Specificity::Level2);
  EXPECT_THROW(specificity_from_int(0), std::invalid_argument);
  EXPECT_THROW(specificity_from_int(4), std::invalid_argument);
}

}  // namespace
