#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "quadfermat/arith.hpp"
#include "quadfermat/fermat_generic.hpp"

namespace qf = quadfermat;
using qf::GenericVerdict;
using qf::Natural;

TEST(FermatFactor, Examples) {
  auto r = qf::fermat_factor(9797, 1000);
  ASSERT_EQ(r.verdict, GenericVerdict::Found);
  EXPECT_EQ(r.split->c, 99);
  EXPECT_EQ(r.split->d, 2);
  EXPECT_EQ(r.split->a, 97);
  EXPECT_EQ(r.split->b, 101);
  EXPECT_EQ(r.centers_examined, 1U);

  r = qf::fermat_factor(15, 10);
  EXPECT_EQ(r.split->c, 4);
  EXPECT_EQ(r.split->a, 3);
  EXPECT_EQ(r.split->b, 5);

  r = qf::fermat_factor(25, 10);
  EXPECT_EQ(r.split->c, 5);
  EXPECT_EQ(r.split->d, 0);
  EXPECT_EQ(r.split->a, 5);

  EXPECT_EQ(qf::fermat_factor(101, 1000).verdict, GenericVerdict::Prime);
}

TEST(FermatFactor, RejectsEvenAndSmall) {
  EXPECT_THROW(qf::fermat_factor(9798, 10), std::invalid_argument);
  EXPECT_THROW(qf::fermat_factor(7, 10), std::invalid_argument);
  EXPECT_NO_THROW(qf::fermat_factor(9, 10));
  EXPECT_EQ(qf::fermat_factor(9, 10).split->a, 3);
}

TEST(FermatFactor, BudgetIsReported) {
  // 3 * 1000003: the center sits far from sqrt(N).
  auto r = qf::fermat_factor(3000009, 5);
  EXPECT_EQ(r.verdict, GenericVerdict::BudgetExhausted);
  EXPECT_FALSE(r.split);
  EXPECT_EQ(r.centers_examined, 6U);
  // A zero budget still examines the first center.
  EXPECT_EQ(qf::fermat_factor(9797, 0).verdict, GenericVerdict::Found);
}

TEST(FermatFactor, MatchesOracleForOddNUpTo100000) {
  const std::vector<std::uint64_t> primes = qf::primes_up_to(100'000);
  std::vector<bool> prime(100'001, false);
  for (auto p : primes) prime[p] = true;

  for (std::uint64_t N = 9; N <= 100'000; N += 2) {
    auto r = qf::fermat_factor(N, ~std::uint64_t{0});
    if (prime[N]) {
      ASSERT_EQ(r.verdict, GenericVerdict::Prime) << N;
      continue;
    }
    ASSERT_EQ(r.verdict, GenericVerdict::Found) << N;
    const auto a = static_cast<std::uint64_t>(r.split->a), b = static_cast<std::uint64_t>(r.split->b);
    ASSERT_GT(a, 1U) << N;
    ASSERT_EQ(a * b, N);
    ASSERT_EQ(N % a, 0U);

    // First hit: the largest divisor <= sqrt(N) gives the smallest center.
    std::uint64_t best = 1;
    for (std::uint64_t x = 3; x * x <= N; x += 2)
      if (N % x == 0) best = x;
    ASSERT_EQ(a, best) << N;
  }
}
