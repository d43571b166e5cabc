#include <vector>

#include <gtest/gtest.h>

#include "mra/policies.hpp"

using namespace mra;

TEST(RoundRobin, CyclesAfterLastPick)
{
  QueueScheduler rr(PolicyKind::round_robin, 4, 0);
  const std::vector<std::size_t> all{1, 2, 3};
  EXPECT_EQ(rr.choose(std::vector<std::size_t>{2}), 2u);  // last = 2
  EXPECT_EQ(rr.choose(all), 3u);
  EXPECT_EQ(rr.choose(all), 1u);
}

TEST(RoundRobin, SkipsEmptyQueues)
{
  QueueScheduler rr(PolicyKind::round_robin, 5, 0);
  EXPECT_EQ(rr.choose(std::vector<std::size_t>{1, 4}), 1u);
  EXPECT_EQ(rr.choose(std::vector<std::size_t>{1, 4}), 4u);
  EXPECT_EQ(rr.choose(std::vector<std::size_t>{2, 3}), 2u);
}

TEST(RoundRobin, EveryQueueOncePerWindow)
{
  QueueScheduler rr(PolicyKind::round_robin, 8, 0);
  rr.choose(std::vector<std::size_t>{5});
  const std::vector<std::size_t> set{1, 3, 4, 6, 7};
  for (int window = 0; window < 10; ++window) {
    std::vector<int> seen(8, 0);
    for (std::size_t n = 0; n < set.size(); ++n) ++seen[rr.choose(set)];
    for (std::size_t q : set) EXPECT_EQ(seen[q], 1);
  }
}

TEST(Scheduler, EmptySetIsALogicError)
{
  QueueScheduler rr(PolicyKind::round_robin, 3, 0);
  EXPECT_THROW(rr.choose(std::vector<std::size_t>{}), std::logic_error);
  QueueScheduler dts(PolicyKind::dts, 3, 0);
  EXPECT_THROW(dts.choose(std::vector<std::size_t>{}), std::logic_error);
}

TEST(Dts, SeededDeterminism)
{
  const std::vector<std::size_t> set{1, 2};
  QueueScheduler a(PolicyKind::dts, 3, 77);
  QueueScheduler b(PolicyKind::dts, 3, 77);
  for (int n = 0; n < 500; ++n) ASSERT_EQ(a.choose(set), b.choose(set));
}

TEST(Dts, StrongPosteriorDominates)
{
  QueueScheduler dts(PolicyKind::dts, 3, 1);
  dts.set_posterior(1, 50.0, 1.0);
  dts.set_posterior(2, 1.0, 50.0);
  const std::vector<std::size_t> set{1, 2};
  int ones = 0;
  for (int n = 0; n < 10000; ++n) ones += dts.choose(set) == 1;
  EXPECT_GE(ones, 9900);
}

TEST(Dts, FirstRewardBelowCap)
{
  QueueScheduler dts(PolicyKind::dts, 2, 0);
  dts.update(1, 5.0);
  EXPECT_EQ(dts.alpha(1), 2.0);
  EXPECT_EQ(dts.beta(1), 1.0);
  EXPECT_EQ(dts.best_h(1), 5.0);
  dts.update(1, 5.0);  // no strict decrease
  EXPECT_EQ(dts.alpha(1), 2.0);
  EXPECT_EQ(dts.beta(1), 2.0);
}

TEST(Dts, CapAlgebraPreservesMass)
{
  QueueScheduler dts(PolicyKind::dts, 2, 0);
  dts.set_posterior(1, 6.0, 4.0);
  dts.update(1, 100.0);  // first observation: reward
  dts.set_posterior(1, 6.0, 4.0);
  dts.update(1, 100.0);  // r = 0
  EXPECT_DOUBLE_EQ(dts.alpha(1), 6.0 * 10.0 / 11.0);
  EXPECT_DOUBLE_EQ(dts.beta(1), 5.0 * 10.0 / 11.0);
  EXPECT_DOUBLE_EQ(dts.alpha(1) + dts.beta(1), 10.0);
}

TEST(Dts, ConstantRewardConverges)
{
  QueueScheduler dts(PolicyKind::dts, 2, 0);
  double h = 1e6;
  for (int n = 0; n < 200; ++n) dts.update(1, h -= 1.0);
  const double mean = dts.alpha(1) / (dts.alpha(1) + dts.beta(1));
  EXPECT_GT(mean, 0.95);
}

TEST(Dts, ParametersStayBounded)
{
  QueueScheduler dts(PolicyKind::dts, 2, 0);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> h(0.0, 100.0);
  for (int n = 0; n < 5000; ++n) {
    dts.update(1, h(rng));
    ASSERT_GT(dts.alpha(1), 0.0);
    ASSERT_GT(dts.beta(1), 0.0);
    ASSERT_LE(dts.alpha(1) + dts.beta(1), dts.cap() + 1.0 + 1e-12);
  }
}

TEST(Policy, ParseNames)
{
  EXPECT_EQ(parse_policy("rr"), PolicyKind::round_robin);
  EXPECT_EQ(parse_policy("dts"), PolicyKind::dts);
  EXPECT_THROW(parse_policy("greedy"), ConfigError);
}
