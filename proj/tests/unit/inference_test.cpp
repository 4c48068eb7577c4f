#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "plancomp/inference.hpp"
#include "plancomp/ontology.hpp"

namespace {

using namespace plancomp;
using Relations = std::vector<std::string>;

KnowledgeGraph two_plans(double cost_a, double makespan_a, double cost_b, double makespan_b) {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  assert_plan(kb, "a", {"x", "y"}, cost_a, makespan_a);
  assert_plan(kb, "b", {"x", "z"}, cost_b, makespan_b);
  return kb;
}

std::size_t dominance_tuples(const KnowledgeGraph& kb) {
  std::size_t n = 0;
  for (const auto& t : kb.tuples()) {
    if (t.property == vocab::kIsBetterPlanThan || t.property == vocab::kIsWorsePlanThan ||
        t.property == vocab::kIsEquivalentPlanTo)
      ++n;
  }
  return n;
}

TEST(CompareQualityPair, AssertsBothDirectionsAtBothLevels) {
  KnowledgeGraph kb = test::drinks_kb(false);
  EXPECT_EQ(compare_quality_pair(kb, "bringing tea", "bringing cola", QualityKind::Cost),
            QualityOrder::ABetter);
  auto has = [&](const std::string& s, std::string_view p, const std::string& o) {
    return kb.contains({s, std::string(p), Term(o), Interval::universal(), Sign::Positive});
  };
  EXPECT_TRUE(has("bringing tea cost", vocab::kHasBetterQualityValueThan, "bringing cola cost"));
  EXPECT_TRUE(has("bringing cola cost", vocab::kHasWorseQualityValueThan, "bringing tea cost"));
  EXPECT_TRUE(has("bringing tea", vocab::kIsCheaperPlanThan, "bringing cola"));
  EXPECT_TRUE(has("bringing cola", vocab::kIsMoreExpensivePlanThan, "bringing tea"));

  const auto size = kb.size();
  compare_quality_pair(kb, "bringing tea", "bringing cola", QualityKind::Cost);
  EXPECT_EQ(kb.size(), size);
}

TEST(CompareQualityPair, PolarityAndTolerance) {
  KnowledgeGraph kb = two_plans(10, 5, 12, 5);
  EXPECT_EQ(compare_quality_pair(kb, "a", "b", QualityKind::Cost, Polarity::HigherIsBetter),
            QualityOrder::AWorse);
  KnowledgeGraph tol = two_plans(10, 5, 12, 5);
  EXPECT_EQ(compare_quality_pair(tol, "a", "b", QualityKind::Cost, Polarity::LowerIsBetter, 2.0),
            QualityOrder::Equal);
  EXPECT_EQ(plan_relations(tol, "a", "b"), (Relations{"isPlanWithSameCostAs"}));
}

TEST(CompareQualityPair, Errors) {
  KnowledgeGraph kb = two_plans(1, 1, 2, 2);
  EXPECT_THROW(compare_quality_pair(kb, "a", "nope", QualityKind::Cost), UnknownPlanError);
  kb.assert_tuple({"c", "type", "Plan", Interval::universal(), Sign::Positive});
  EXPECT_THROW(compare_quality_pair(kb, "a", "c", QualityKind::Cost), MissingQualityError);
  kb.assert_tuple({"c", "hasCost", "c cost", Interval::universal(), Sign::Positive});
  kb.assert_tuple({"c cost", "hasDataValue", DataValue::text("cheap"), Interval::universal(),
                   Sign::Positive});
  EXPECT_THROW(compare_quality_pair(kb, "a", "c", QualityKind::Cost), NonNumericValueError);
}

TEST(Dominance, AllBetterIsBetter) {
  KnowledgeGraph kb = test::drinks_kb(false);
  for (QualityKind k : kAllQualityKinds) compare_quality_pair(kb, "bringing tea", "bringing cola", k);
  const auto out = infer_plan_dominance(kb, "bringing tea", "bringing cola");
  EXPECT_EQ(out.verdict, Verdict::Better);
  EXPECT_EQ(plan_relations(kb, "bringing tea", "bringing cola"),
            (Relations{"isBetterPlanThan", "isCheaperPlanThan", "isFasterPlanThan",
                       "isShorterPlanThan"}));
  EXPECT_EQ(plan_relations(kb, "bringing cola", "bringing tea"),
            (Relations{"isLongerPlanThan", "isMoreExpensivePlanThan", "isSlowerPlanThan",
                       "isWorsePlanThan"}));
}

TEST(Dominance, ConflictIsUndecidedAndAssertsNothing) {
  KnowledgeGraph kb = two_plans(10, 40, 30, 20);
  const auto report = compare_all_plans(kb);
  ASSERT_EQ(report.pairs.size(), 1u);
  EXPECT_EQ(report.pairs[0].verdict, Verdict::Undecided);
  EXPECT_EQ(dominance_tuples(kb), 0u);
  EXPECT_EQ(plan_relations(kb, "a", "b"),
            (Relations{"isCheaperPlanThan", "isPlanWithSameNumberOfTasksAs", "isSlowerPlanThan"}));
}

TEST(Dominance, BetterWithATieIsUndecided) {
  KnowledgeGraph kb = two_plans(10, 20, 30, 20);
  EXPECT_EQ(compare_all_plans(kb).pairs[0].verdict, Verdict::Undecided);
  EXPECT_EQ(dominance_tuples(kb), 0u);
}

TEST(Dominance, AllEqualIsEquivalentBothWays) {
  KnowledgeGraph kb = two_plans(10, 20, 10, 20);
  EXPECT_EQ(compare_all_plans(kb).pairs[0].verdict, Verdict::Equivalent);
  EXPECT_TRUE(kb.contains({"a", "isEquivalentPlanTo", "b", Interval::universal(), Sign::Positive}));
  EXPECT_TRUE(kb.contains({"b", "isEquivalentPlanTo", "a", Interval::universal(), Sign::Positive}));
}

TEST(Dominance, NoComparedQualities) {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  for (const char* p : {"a", "b"})
    kb.assert_tuple({p, "type", "Plan", Interval::universal(), Sign::Positive});
  EXPECT_THROW(infer_plan_dominance(kb, "a", "b"), NoComparedQualitiesError);
  const auto report = compare_all_plans(kb);
  EXPECT_TRUE(report.pairs.empty());
  ASSERT_EQ(report.errors.size(), 1u);
}

TEST(Dominance, OneSidedQualityWarns) {
  KnowledgeGraph kb = two_plans(1, 1, 2, 2);
  kb.assert_tuple({"c", "type", "Plan", Interval::universal(), Sign::Positive});
  kb.assert_tuple({"c", "hasCost", "c cost", Interval::universal(), Sign::Positive});
  kb.assert_tuple({"c cost", "hasDataValue", DataValue::number(5), Interval::universal(),
                   Sign::Positive});
  compare_quality_pair(kb, "a", "c", QualityKind::Cost);
  const auto out = infer_plan_dominance(kb, "a", "c");
  EXPECT_EQ(out.verdict, Verdict::Better);
  EXPECT_FALSE(out.warnings.empty());
}

TEST(CompareAllPlans, SortedPairsAndIdempotence) {
  KnowledgeGraph kb = make_plan_knowledge_graph();
  assert_plan(kb, "c", {"t"}, 3, 3);
  assert_plan(kb, "a", {"t"}, 1, 1);
  assert_plan(kb, "b", {"t"}, 2, 2);
  const auto report = compare_all_plans(kb);
  ASSERT_EQ(report.pairs.size(), 3u);
  EXPECT_EQ(report.pairs[0].plan_a, "a");
  EXPECT_EQ(report.pairs[0].plan_b, "b");
  EXPECT_EQ(report.pairs[2].plan_a, "b");
  EXPECT_EQ(report.pairs[2].plan_b, "c");
  const auto size = kb.size();
  compare_all_plans(kb);
  EXPECT_EQ(kb.size(), size);
}

TEST(InferenceConfig, Parses) {
  const auto c = InferenceConfig::parse(
      "# comment\npolarity.cost = higher\nequality_tolerance=0.5\npolarity.number_of_tasks=lower\n");
  EXPECT_EQ(c.polarity_of(QualityKind::Cost), Polarity::HigherIsBetter);
  EXPECT_EQ(c.polarity_of(QualityKind::Makespan), Polarity::LowerIsBetter);
  EXPECT_DOUBLE_EQ(c.equality_tolerance, 0.5);
  EXPECT_THROW(InferenceConfig::parse("polarity.speed=lower\n"), ParseError);
  EXPECT_THROW(InferenceConfig::parse("polarity.cost=sideways\n"), ParseError);
  EXPECT_THROW(InferenceConfig::parse("equality_tolerance=-1\n"), ParseError);
  EXPECT_THROW(InferenceConfig::parse("no equals sign\n"), ParseError);
}

TEST(Verdict, Names) {
  EXPECT_EQ(to_string(Verdict::Better), "better");
  EXPECT_EQ(to_string(Verdict::Undecided), "undecided");
}

}  // namespace
