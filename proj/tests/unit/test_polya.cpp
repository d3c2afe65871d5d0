#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "zoo/polya.hpp"

using namespace zoo;

namespace {

// (1/n!) sum over permutations of d^{cycles}, optionally even ones only.
BigRational brute_force(int n, long d, bool even_only) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0, count = 0;
  do {
    std::vector<bool> seen(n, false);
    int cycles = 0, even_cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = true, ++len;
      ++cycles;
      if (len % 2 == 0) ++even_cycles;
    }
    ++count;
    if (even_only && even_cycles % 2) continue;
    BigInt w;
    mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(d), cycles);
    total += w;
  } while (std::next_permutation(perm.begin(), perm.end()));
  BigRational r(total, count);
  r.canonicalize();
  return even_only ? BigRational(2 * r) : r;
}

}  // namespace

TEST(Partitions, CountsMatchKnownValues) {
  EXPECT_EQ(partition_count(0), 1);
  EXPECT_EQ(partition_count(10), 42);
  EXPECT_EQ(partition_count(50), 204226);
  EXPECT_EQ(partition_count(100), 190569292);
  EXPECT_EQ(partition_count(200), BigInt("3972999029388"));
}

TEST(Partitions, EnumerationIsExhaustiveAndDistinct) {
  for (int n = 1; n <= 25; ++n) {
    std::set<std::vector<int>> seen;
    for (const auto& p : partitions_iter(n)) {
      int total = 0;
      for (size_t k = 0; k < p.j.size(); ++k) total += static_cast<int>(k + 1) * p.j[k];
      ASSERT_EQ(total, n);
      std::vector<int> key = p.j;
      while (!key.empty() && key.back() == 0) key.pop_back();
      ASSERT_TRUE(seen.insert(key).second) << n;
    }
    EXPECT_EQ(BigInt(seen.size()), partition_count(n)) << n;
  }
}

TEST(Partitions, CapRaises) {
  EXPECT_THROW(partitions_iter(80), ResourceError);
  EXPECT_THROW(cycle_index_sum_symmetric(30, 2, 1000), ResourceError);
}

TEST(CycleIndex, BruteForcePermutations) {
  for (int n = 1; n <= 7; ++n) {
    for (long d : {1L, 2L, 3L, 5L}) {
      EXPECT_EQ(cycle_index_sum_symmetric(n, d), brute_force(n, d, false)) << n << " " << d;
      EXPECT_EQ(cycle_index_sum_alternating(n, d), brute_force(n, d, true)) << n << " " << d;
    }
  }
}

TEST(CycleIndex, ClosedFormsOnGrid) {
  for (int n = 1; n <= 25; ++n) {
    for (long d = 1; d <= 5; ++d) {
      ASSERT_EQ(cycle_index_sum_symmetric(n, d), BigRational(closed_form_symmetric(n, d)))
          << n << " " << d;
      ASSERT_EQ(cycle_index_sum_alternating(n, d), closed_form_alternating(n, d))
          << n << " " << d;
      ASSERT_EQ(gf_coefficient_oracle(n, d), closed_form_symmetric(n, d));
    }
  }
}

TEST(CycleIndex, TwentyColours) {
  const BigInt want("68923264410");  // C(39, 20)
  EXPECT_EQ(closed_form_symmetric(20, 20), want);
  EXPECT_EQ(cycle_index_sum_symmetric(20, 20), BigRational(want));
  EXPECT_EQ(gf_coefficient_oracle(20, 20), want);
  // d = n: the falling factorial term is exactly 1.
  EXPECT_EQ(closed_form_alternating(20, 20), BigRational(want + 1));
  EXPECT_EQ(cycle_index_sum_alternating(20, 20), BigRational(want + 1));
}

TEST(CycleIndex, CentralBinomial) {
  EXPECT_EQ(closed_form_symmetric(100, 101),
            BigInt("90548514656103281165404177077484163874504589675413336841320"));
}

TEST(CycleIndex, AlternatingExceedsSymmetricOnlyWhenDAtLeastN) {
  for (long n = 1; n <= 12; ++n)
    for (long d = 1; d <= 15; ++d) {
      BigRational diff = closed_form_alternating(n, d) - BigRational(closed_form_symmetric(n, d));
      EXPECT_EQ(diff != 0, d >= n) << n << " " << d;
    }
}
