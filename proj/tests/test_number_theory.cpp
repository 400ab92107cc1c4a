#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "powerspec/number_theory.hpp"

using namespace powerspec;

namespace {

std::uint64_t phi_bruteforce(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t a = 1; a <= n; ++a) c += std::gcd(a, n) == 1;
  return c;
}

// Partition count by the usual coin-change recurrence.
std::size_t partition_count(unsigned k) {
  std::vector<std::size_t> ways(k + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= k; ++part)
    for (unsigned s = part; s <= k; ++s) ways[s] += ways[s - part];
  return ways[k];
}

}  // namespace

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(7), 6u);
  EXPECT_EQ(euler_phi(12), phi_bruteforce(12));
  EXPECT_EQ(euler_phi(12), 4u);
}

TEST(EulerPhi, ZeroIsDomainError) { EXPECT_THROW(euler_phi(0), std::domain_error); }

TEST(EulerPhi, MatchesBruteForce) {
  for (std::uint64_t n = 1; n <= 600; ++n) ASSERT_EQ(euler_phi(n), phi_bruteforce(n)) << n;
}

TEST(Factorize, Examples) {
  using PP = std::vector<std::pair<std::uint64_t, unsigned>>;
  EXPECT_EQ(factorize(8).prime_powers, (PP{{2, 3}}));
  EXPECT_EQ(factorize(12).prime_powers, (PP{{2, 2}, {3, 1}}));
  const auto f15 = factorize(15);
  EXPECT_EQ(f15.prime_powers, (PP{{3, 1}, {5, 1}}));
  EXPECT_TRUE(f15.is_product_of_two_distinct_primes());
  EXPECT_TRUE(f15.is_product_of_two_primes());
}

TEST(Factorize, RejectsSmallInputs) {
  EXPECT_THROW(factorize(0), std::domain_error);
  EXPECT_THROW(factorize(1), std::domain_error);
}

TEST(Factorize, Predicates) {
  EXPECT_TRUE(factorize(9).is_product_of_two_primes());
  EXPECT_FALSE(factorize(9).is_product_of_two_distinct_primes());
  EXPECT_TRUE(factorize(9).is_prime_power());
  EXPECT_FALSE(factorize(12).is_prime_power());
  EXPECT_FALSE(factorize(12).is_product_of_two_primes());
  EXPECT_TRUE(factorize(13).is_prime());
  EXPECT_TRUE(is_power_of_two(64));
  EXPECT_FALSE(is_power_of_two(12));
  EXPECT_FALSE(is_prime_power(1));
}

TEST(Factorize, RandomRoundTrip) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::uint64_t> dist(2, 5'000'000);
  for (int i = 0; i < 500; ++i) {
    const auto n = dist(rng);
    const auto f = factorize(n);
    ASSERT_EQ(f.value(), n);
    for (std::size_t k = 0; k < f.prime_powers.size(); ++k) {
      ASSERT_TRUE(is_prime(f.prime_powers[k].first));
      ASSERT_GE(f.prime_powers[k].second, 1u);
      if (k) {
        ASSERT_LT(f.prime_powers[k - 1].first, f.prime_powers[k].first);
      }
    }
  }
}

TEST(IntegerPartitions, CountsAndShape) {
  for (unsigned k = 0; k <= 12; ++k) {
    const auto parts = integer_partitions(k);
    ASSERT_EQ(parts.size(), partition_count(k)) << k;
    for (const auto& p : parts) {
      ASSERT_EQ(std::accumulate(p.begin(), p.end(), 0u), k);
      ASSERT_TRUE(std::is_sorted(p.rbegin(), p.rend()));
    }
  }
}
