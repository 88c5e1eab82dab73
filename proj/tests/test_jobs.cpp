#include <gtest/gtest.h>

#include <random>

#include "edgesched/dispatch.hpp"
#include "support/instances.hpp"

using namespace edgesched;
using edgesched::testing::icu_jobs;
using edgesched::testing::make_job;

TEST(Job, Validation) {
  auto j = make_job("J", 0, 1, {1, 1}, {1, 1}, 1);
  EXPECT_NO_THROW(j.validate());
  j.on(Tier::Device).transmission = 3;
  EXPECT_THROW(j.validate(), std::invalid_argument);
  j = make_job("J", -1, 1, {1, 1}, {1, 1}, 1);
  EXPECT_THROW(j.validate(), std::invalid_argument);
  j = make_job("J", 0, 0, {1, 1}, {1, 1}, 1);
  EXPECT_THROW(j.validate(), std::invalid_argument);
  j = make_job("J", 0, 1, {0, 1}, {1, 1}, 1);
  EXPECT_THROW(j.validate(), std::invalid_argument);
}

TEST(Objective, AllDeviceIcuInstance) {
  const auto jobs = icu_jobs();
  const auto m = objective(simulate(uniform_assignment(jobs.size(), Tier::Device), jobs), jobs);
  EXPECT_EQ(m.unweighted_total, 366);
  EXPECT_EQ(m.last_completion, 94);
  // the five weight-2 jobs' device times counted once more
  EXPECT_EQ(m.weighted_total, 366 + (14 + 12 + 11 + 22 + 22));
}

TEST(Objective, SingleJobIsWeightTimesCost) {
  for (Tier t : kAllTiers) {
    const std::vector<Job> one{make_job("J", 0, 3, {4, 9}, {5, 2}, 20)};
    const auto m = evaluate({t}, one);
    EXPECT_EQ(m.weighted_total, 3 * one[0].on(t).total());
    EXPECT_EQ(m.unweighted_total, one[0].on(t).total());
  }
}

TEST(Objective, MissingOrDuplicateJobIsAnError) {
  const auto jobs = icu_jobs();
  auto s = simulate(uniform_assignment(jobs.size(), Tier::Edge), jobs);
  auto missing = s;
  missing.entries.pop_back();
  EXPECT_THROW(objective(missing, jobs), std::invalid_argument);
  auto dup = s;
  dup.entries.back() = dup.entries.front();
  EXPECT_THROW(objective(dup, jobs), std::invalid_argument);
}

TEST(Objective, WeightedNeverBelowUnweighted) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto jobs = edgesched::testing::random_jobs(rng);
    Assignment a;
    for (std::size_t k = 0; k < jobs.size(); ++k) a.push_back(static_cast<Tier>(rng() % 3));
    const auto m = evaluate(a, jobs);
    EXPECT_GE(m.weighted_total, m.unweighted_total);
    EXPECT_GE(m.unweighted_total, 0);
  }
}

TEST(Objective, AdditiveOverDisjointMachines) {
  // two job sets that never share a machine: one set on cloud, the other on edge and devices
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto a = edgesched::testing::random_jobs(rng);
    const auto b = edgesched::testing::random_jobs(rng);
    std::vector<Job> all(a);
    all.insert(all.end(), b.begin(), b.end());
    Assignment aa(a.size(), Tier::Cloud), ab;
    for (std::size_t k = 0; k < b.size(); ++k) ab.push_back(k % 2 ? Tier::Edge : Tier::Device);
    Assignment joint(aa);
    joint.insert(joint.end(), ab.begin(), ab.end());
    const auto ma = evaluate(aa, a), mb = evaluate(ab, b), mj = evaluate(joint, all);
    EXPECT_EQ(mj.weighted_total, ma.weighted_total + mb.weighted_total);
    EXPECT_EQ(mj.unweighted_total, ma.unweighted_total + mb.unweighted_total);
  }
}

TEST(LowerBound, IcuInstance) {
  const auto jobs = icu_jobs();
  // per-job minima of I + D over the three machines, written out by hand
  const TimeUnits minima[] = {14, 9, 8, 16, 10, 19, 19, 8, 8, 16};
  const TimeUnits weights[] = {2, 2, 1, 1, 2, 2, 2, 1, 1, 1};
  TimeUnits w = 0, u = 0;
  for (int i = 0; i < 10; ++i) {
    u += minima[i];
    w += weights[i] * minima[i];
  }
  ASSERT_EQ(w, 198);
  ASSERT_EQ(u, 127);
  const auto lb = lower_bound(jobs);
  EXPECT_EQ(lb.weighted, 198);
  EXPECT_EQ(lb.unweighted, 127);
}

TEST(LowerBound, SingleJobAndEmpty) {
  const std::vector<Job> one{make_job("J", 4, 2, {3, 30}, {5, 6}, 12)};
  EXPECT_EQ(lower_bound(one).weighted, 2 * 11);
  EXPECT_EQ(lower_bound(one).unweighted, 11);
  EXPECT_THROW(lower_bound(std::vector<Job>{}), std::invalid_argument);
}

TEST(LowerBound, NeverAboveAnyFeasibleSchedule) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto jobs = edgesched::testing::random_jobs(rng);
    const auto lb = lower_bound(jobs);
    for (int k = 0; k < 5; ++k) {
      Assignment a;
      for (std::size_t j = 0; j < jobs.size(); ++j) a.push_back(static_cast<Tier>(rng() % 3));
      const auto m = evaluate(a, jobs);
      EXPECT_LE(lb.weighted, m.weighted_total);
      EXPECT_LE(lb.unweighted, m.unweighted_total);
    }
  }
}
