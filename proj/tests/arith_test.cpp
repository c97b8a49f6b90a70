#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "quadfermat/arith.hpp"

namespace qf = quadfermat;
using qf::Natural;

namespace {

// Independent oracles: plain trial division and Euler's criterion.
bool trial_division_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

int euler_criterion(std::int64_t a, std::uint64_t p) {
  std::uint64_t r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                               static_cast<std::int64_t>(p));
  if (r == 0) return 0;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < (p - 1) / 2; ++i) acc = acc * r % p;
  return acc == 1 ? 1 : -1;
}

}  // namespace

TEST(Isqrt, Examples) {
  EXPECT_EQ(qf::isqrt(Natural(9797)), 98);
  EXPECT_EQ(qf::isqrt(Natural(0)), 0);
  EXPECT_EQ(qf::isqrt(Natural(16)), 4);
  EXPECT_EQ(qf::isqrt(std::uint64_t{9797}), 98U);
}

TEST(CeilSqrt, Examples) {
  EXPECT_EQ(qf::ceil_sqrt(Natural(9797)), 99);
  EXPECT_EQ(qf::ceil_sqrt(Natural(16)), 4);
  EXPECT_EQ(qf::ceil_sqrt(Natural(17)), 5);
}

TEST(Isqrt, AgreesWithIncrementalRootUpToOneMillion) {
  std::uint64_t root = 0;  // advanced independently of the implementation
  for (std::uint64_t x = 0; x <= 1'000'000; ++x) {
    while ((root + 1) * (root + 1) <= x) ++root;
    const Natural r = qf::isqrt(Natural(x));
    ASSERT_EQ(r, root) << x;
    const bool exact = root * root == x;
    ASSERT_EQ(qf::ceil_sqrt(Natural(x)), root + (exact ? 0 : 1)) << x;
    ASSERT_EQ(qf::is_perfect_square(Natural(x)).has_value(), exact) << x;
  }
}

TEST(Isqrt, LargeValues) {
  const Natural big = Natural(1) << 400;
  EXPECT_EQ(qf::isqrt(big), Natural(1) << 200);
  EXPECT_EQ(qf::isqrt(Natural(big - 1)), (Natural(1) << 200) - 1);
  EXPECT_EQ(qf::ceil_sqrt(Natural(big + 1)), (Natural(1) << 200) + 1);
  EXPECT_EQ(qf::isqrt(std::uint64_t{18446744073709551615ULL}), 4294967295ULL);
}

TEST(IsPerfectSquare, Examples) {
  EXPECT_EQ(qf::is_perfect_square(Natural(16)), Natural(4));
  EXPECT_EQ(qf::is_perfect_square(Natural(99 * 99 - 9797)), Natural(2));
  EXPECT_FALSE(qf::is_perfect_square(Natural(5)));
  EXPECT_FALSE(qf::is_perfect_square(qf::Integer(-4)));
}

TEST(IsPerfectSquare, PrescreenNeverRejectsASquare) {
  for (std::uint64_t r = 0; r < 200'000; ++r) {
    const Natural sq = Natural(r) * r;
    ASSERT_TRUE(qf::detail::may_be_square(qf::detail::mod_u64(sq, qf::detail::screen_modulus))) << r;
    ASSERT_EQ(qf::is_perfect_square(sq), Natural(r));
  }
  const Natural big = (Natural(1) << 300) + 12345;
  EXPECT_EQ(qf::is_perfect_square(Natural(big * big)), big);
  EXPECT_FALSE(qf::is_perfect_square(Natural(big * big + 1)));
}

TEST(ModInv, Examples) {
  EXPECT_EQ(qf::mod_inv(16, 7), 4U);
  EXPECT_EQ(qf::mod_inv(1, 101), 1U);
  EXPECT_EQ(qf::mod_inv(100, 101), 100U);
  EXPECT_THROW(qf::mod_inv(14, 7), std::domain_error);
  EXPECT_THROW(qf::mod_inv(0, 7), std::domain_error);
}

TEST(ModInv, InvertsEveryUnitModSmallPrimes) {
  for (std::uint64_t p : qf::primes_up_to(1000)) {
    if (p == 2) continue;
    for (std::uint64_t a = 1; a < p; ++a) ASSERT_EQ(qf::mod_inv(a, p) * a % p, 1U) << a << " mod " << p;
  }
}

TEST(Legendre, Examples) {
  EXPECT_EQ(qf::legendre(2, 7), 1);
  EXPECT_EQ(qf::legendre(3, 7), -1);
  EXPECT_EQ(qf::legendre(14, 7), 0);
  EXPECT_EQ(qf::legendre(-1, 7), -1);
  EXPECT_EQ(qf::legendre(-1, 13), 1);
  EXPECT_THROW(qf::legendre(3, 2), std::invalid_argument);
}

TEST(Legendre, HalfOfUnitsAreResiduesAndEulerAgrees) {
  for (std::uint64_t p : qf::primes_up_to(200)) {
    if (p == 2) continue;
    std::uint64_t residues = 0;
    for (std::int64_t a = -static_cast<std::int64_t>(p); a < 2 * static_cast<std::int64_t>(p); ++a) {
      const int l = qf::legendre(a, p);
      ASSERT_EQ(l, euler_criterion(a, p)) << a << " mod " << p;
      if (a >= 1 && a < static_cast<std::int64_t>(p) && l == 1) ++residues;
    }
    ASSERT_EQ(residues, (p - 1) / 2) << p;
  }
}

TEST(Primes, UpTo) {
  EXPECT_EQ(qf::primes_up_to(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_TRUE(qf::primes_up_to(1).empty());
  EXPECT_EQ(qf::primes_up_to(30), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(qf::primes_up_to(2), (std::vector<std::uint64_t>{2}));
}

TEST(IsPrime, Examples) {
  EXPECT_TRUE(qf::is_prime(101));
  EXPECT_FALSE(qf::is_prime(9797));
  EXPECT_TRUE(qf::is_prime(6700417));
  EXPECT_TRUE(trial_division_prime(6700417));
  EXPECT_FALSE(qf::is_prime(0));
  EXPECT_FALSE(qf::is_prime(1));
  EXPECT_TRUE(qf::is_prime(2));
}

TEST(IsPrime, AgreesWithTrialDivisionUpToOneMillion) {
  std::vector<std::uint64_t> sieve = qf::primes_up_to(1'000'000);
  std::size_t next = 0;
  for (std::uint64_t x = 0; x <= 1'000'000; ++x) {
    const bool expected = next < sieve.size() && sieve[next] == x;
    if (expected) ++next;
    ASSERT_EQ(qf::is_prime(x), expected) << x;
    ASSERT_EQ(qf::is_prime(Natural(x)), expected) << x;
  }
  // the sieve itself against trial division on a prefix
  for (std::uint64_t x = 0; x <= 20'000; ++x)
    ASSERT_EQ(std::binary_search(sieve.begin(), sieve.end(), x), trial_division_prime(x)) << x;
}

TEST(IsPrime, SixtyFourBitAndBeyond) {
  // strong pseudoprimes to several small bases
  EXPECT_FALSE(qf::is_prime(std::uint64_t{3215031751ULL}));
  EXPECT_FALSE(qf::is_prime(std::uint64_t{3825123056546413051ULL}));
  EXPECT_TRUE(qf::is_prime(std::uint64_t{18446744073709551557ULL}));  // largest 64-bit prime
  EXPECT_FALSE(qf::is_prime(std::uint64_t{4294967297ULL}));           // F_5
  const Natural f6 = (Natural(1) << 64) + 1;
  EXPECT_FALSE(qf::is_prime(f6));
  EXPECT_TRUE(qf::is_prime((Natural(1) << 89) - 1));
  EXPECT_TRUE(qf::is_prime(Natural("5704689200685129054721")));
  EXPECT_TRUE(qf::is_prime(Natural("93461639715357977769163558199606896584051237541638188580280321")));
  EXPECT_FALSE(qf::is_prime(Natural("5704689200685129054721") * Natural("59649589127497217")));
}

TEST(Fraction, FloorCeilAndText) {
  EXPECT_EQ(qf::Fraction(60, 40).ceil(), 2);
  EXPECT_EQ(qf::Fraction(60, 40).floor(), 1);
  EXPECT_EQ(qf::Fraction(-10, 40).ceil(), 0);
  EXPECT_EQ(qf::Fraction(-10, 40).floor(), -1);
  EXPECT_EQ(qf::Fraction(80, 40).ceil(), 2);
  EXPECT_EQ(qf::Fraction(60, 40).str(), "3/2");
  EXPECT_EQ(qf::Fraction(80, 40).str(), "2");
  EXPECT_TRUE(qf::Integer(1) < qf::Fraction(60, 40));
  EXPECT_FALSE(qf::Integer(2) < qf::Fraction(80, 40));
  EXPECT_THROW(qf::Fraction(1, 0), std::invalid_argument);
}

TEST(ParseNatural, AcceptsDigitsOnly) {
  EXPECT_EQ(qf::parse_natural("18446744073709551617"), (Natural(1) << 64) + 1);
  EXPECT_THROW(qf::parse_natural(""), std::invalid_argument);
  EXPECT_THROW(qf::parse_natural("-5"), std::invalid_argument);
  EXPECT_THROW(qf::parse_natural("12a"), std::invalid_argument);
}
