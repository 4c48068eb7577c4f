#include <gtest/gtest.h>

#include "checks.hpp"

namespace {

using plancomp::test::CheckResult;

std::string summary(const CheckResult& r) {
  std::string out;
  for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) out += r.failures[i] + "\n";
  return out;
}

TEST(Property, MonotoneSpecificity) {
  const auto r = plancomp::test::check_monotone_specificity(11u, 350);
  EXPECT_GE(r.cases, 1000u);
  EXPECT_TRUE(r.ok()) << summary(r);
}

TEST(Property, Determinism) {
  const auto r = plancomp::test::check_determinism(12u, 200);
  EXPECT_EQ(r.cases, 200u);
  EXPECT_TRUE(r.ok()) << summary(r);
}

TEST(Property, InverseInvolution) {
  const auto r = plancomp::test::check_inverse_involution(13u, 300);
  EXPECT_GE(r.cases, 1000u);
  EXPECT_TRUE(r.ok()) << summary(r);
}

TEST(Property, IntervalLaws) {
  const auto r = plancomp::test::check_interval_laws(14u, 5000);
  EXPECT_GE(r.cases, 1000u);
  EXPECT_TRUE(r.ok()) << summary(r);
}

TEST(Property, SnapshotRoundTrip) {
  const auto r = plancomp::test::check_snapshot_round_trip(15u, 200);
  EXPECT_TRUE(r.ok()) << summary(r);
}

}  // namespace
