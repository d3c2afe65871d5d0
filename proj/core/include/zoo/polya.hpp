#pragma once

// Cycle-index sums of S_n and A_n evaluated at x_k = d, by exhaustive
// enumeration of partitions of n, next to their binomial closed forms and a
// power-series oracle.

#include <functional>
#include <vector>

#include "zoo/numeric.hpp"

namespace zoo {

// j[k-1] = number of parts equal to k; sum k j_k = n.
struct PartitionMultiplicity {
  int n = 0;
  std::vector<int> j;

  int cycles() const;      // sum j_k
  bool even() const;       // j_2 + j_4 + ... even, i.e. an even permutation class
};

// Partitions with p(n) above this are served by closed forms only.
inline constexpr long kPartitionCap = 1'000'000;

// p(n) by Euler's pentagonal recurrence.
BigInt partition_count(int n);

// Visits each multiplicity vector once, largest part ascending (n = 1+1+...
// first, n = n last). ResourceError when p(n) > cap.
void for_each_partition(int n, const std::function<void(const PartitionMultiplicity&)>& fn,
                        long cap = kPartitionCap);
std::vector<PartitionMultiplicity> partitions_iter(int n, long cap = kPartitionCap);

// sum over partitions of d^{sum j}/prod(k^{j_k} j_k!).
BigRational cycle_index_sum_symmetric(int n, long d, long cap = kPartitionCap);
// Same with the (1 + (-1)^{j_2 + j_4 + ...}) weight.
BigRational cycle_index_sum_alternating(int n, long d, long cap = kPartitionCap);

// C(n+d-1, n)
BigInt closed_form_symmetric(long n, long d);
// C(n+d-1, n) + d(d-1)...(d-n+1)/n!
BigRational closed_form_alternating(long n, long d);

// [t^n] (1-t)^{-d} by squaring truncated series; no binomials involved.
BigInt gf_coefficient_oracle(long n, long d, long cap = 50'000'000);

}  // namespace zoo
