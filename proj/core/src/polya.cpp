#include "zoo/polya.hpp"

#include <string>

namespace zoo {

int PartitionMultiplicity::cycles() const {
  int c = 0;
  for (int x : j) c += x;
  return c;
}

bool PartitionMultiplicity::even() const {
  int s = 0;
  for (std::size_t k = 1; k < j.size(); k += 2) s += j[k];  // j_2, j_4, ...
  return s % 2 == 0;
}

BigInt partition_count(int n) {
  if (n < 0) throw DomainError("partition_count needs n >= 0");
  std::vector<BigInt> p(n + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      const bool plus = k % 2 == 1;
      if (plus) acc += p[m - g1]; else acc -= p[m - g1];
      if (g2 <= m) {
        if (plus) acc += p[m - g2]; else acc -= p[m - g2];
      }
    }
    p[m] = acc;
  }
  return p[n];
}

namespace {

void check_budget(int n, long cap) {
  if (n < 1) throw DomainError("partitions need n >= 1");
  const BigInt count = partition_count(n);
  if (count > cap) {
    throw ResourceError("p(" + std::to_string(n) + ") = " + count.get_str() +
                        " exceeds the enumeration cap of " + std::to_string(cap));
  }
}

// Fills multiplicities for parts <= k, remaining sum `rest`.
void walk(PartitionMultiplicity& pm, int k, int rest,
          const std::function<void(const PartitionMultiplicity&)>& fn) {
  if (rest == 0) {
    fn(pm);
    return;
  }
  if (k == 1) {
    pm.j[0] = rest;
    fn(pm);
    pm.j[0] = 0;
    return;
  }
  for (int m = 0; m * k <= rest; ++m) {
    pm.j[k - 1] = m;
    walk(pm, k - 1, rest - m * k, fn);
  }
  pm.j[k - 1] = 0;
}

// n! * cycle index sum, as an exact integer; `alternating` keeps even classes
// only (counted twice later).
BigInt scaled_class_sum(int n, long d, bool alternating, long cap) {
  check_budget(n, cap);
  const BigInt nfact = factorial(static_cast<unsigned long>(n));
  std::vector<BigInt> dpow(n + 1);
  dpow[0] = 1;
  for (int i = 1; i <= n; ++i) dpow[i] = dpow[i - 1] * d;

  // Depth-first over parts n, n-1, ..., 1, carrying prod k^{j_k} j_k!.
  BigInt total = 0;
  std::vector<int> j(n, 0);
  std::function<void(int, int, int, const BigInt&)> rec =
      [&](int k, int rest, int cycles, const BigInt& denom) {
        if (rest == 0 || k == 1) {
          const int c = cycles + rest;  // rest ones
          j[0] = rest;
          BigInt den = denom * factorial(static_cast<unsigned long>(rest));
          int parity = 0;
          for (int i = 1; i < n; i += 2) parity += j[i];
          j[0] = 0;
          if (alternating && parity % 2 != 0) return;
          total += nfact / den * dpow[c];
          return;
        }
        BigInt den = denom;
        BigInt kpow = 1;
        for (int m = 0; m * k <= rest; ++m) {
          if (m > 0) {
            kpow *= k;
            den = denom * kpow * factorial(static_cast<unsigned long>(m));
          }
          j[k - 1] = m;
          rec(k - 1, rest - m * k, cycles + m, den);
        }
        j[k - 1] = 0;
      };
  rec(n, n, 0, BigInt(1));
  return total;
}

void check_colors(long d) {
  if (d < 1) throw DomainError("need d >= 1 colors");
}

}  // namespace

void for_each_partition(int n, const std::function<void(const PartitionMultiplicity&)>& fn,
                        long cap) {
  check_budget(n, cap);
  PartitionMultiplicity pm;
  pm.n = n;
  pm.j.assign(n, 0);
  // Largest part ascending: peel the largest part k, then fill parts < k.
  for (int k = 1; k <= n; ++k) {
    for (int m = 1; m * k <= n; ++m) {
      pm.j[k - 1] = m;
      if (k == 1) {
        if (m == n) fn(pm);
        continue;
      }
      walk(pm, k - 1, n - m * k, fn);
    }
    pm.j[k - 1] = 0;
  }
}

std::vector<PartitionMultiplicity> partitions_iter(int n, long cap) {
  std::vector<PartitionMultiplicity> out;
  for_each_partition(n, [&](const PartitionMultiplicity& pm) { out.push_back(pm); }, cap);
  return out;
}

BigRational cycle_index_sum_symmetric(int n, long d, long cap) {
  check_colors(d);
  return make_rational(scaled_class_sum(n, d, false, cap),
                       factorial(static_cast<unsigned long>(n)));
}

BigRational cycle_index_sum_alternating(int n, long d, long cap) {
  check_colors(d);
  return make_rational(scaled_class_sum(n, d, true, cap) * 2,
                       factorial(static_cast<unsigned long>(n)));
}

BigInt closed_form_symmetric(long n, long d) {
  if (n < 1) throw DomainError("need n >= 1");
  check_colors(d);
  return binomial(BigInt(n + d - 1), BigInt(n));
}

BigRational closed_form_alternating(long n, long d) {
  BigRational extra = make_rational(falling_factorial(BigInt(d), BigInt(n)),
                                    factorial(static_cast<unsigned long>(n)));
  return BigRational(closed_form_symmetric(n, d)) + extra;
}

BigInt gf_coefficient_oracle(long n, long d, long cap) {
  if (n < 0) throw DomainError("need n >= 0");
  check_colors(d);
  if (n * d > cap) throw ResourceError("gf_coefficient_oracle: n*d beyond cap");
  using Series = std::vector<BigInt>;
  auto mul = [n](const Series& a, const Series& b) {
    Series c(n + 1, BigInt(0));
    for (long i = 0; i <= n; ++i) {
      if (a[i] == 0) continue;
      for (long k = 0; i + k <= n; ++k) c[i + k] += a[i] * b[k];
    }
    return c;
  };
  Series base(n + 1, BigInt(1));  // 1/(1-t)
  Series acc(n + 1, BigInt(0));
  acc[0] = 1;
  for (long e = d; e > 0; e >>= 1) {
    if (e & 1) acc = mul(acc, base);
    if (e > 1) base = mul(base, base);
  }
  return acc[n];
}

}  // namespace zoo
