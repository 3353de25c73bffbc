#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace iwasawa {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Trial-division factorization as (prime, exponent) pairs, ascending primes.
inline std::vector<std::pair<long long, int>> prime_factorization(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline long long pow_mod(long long base, long long exp, long long mod) {
  long long r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

/// Multiplicative order of a modulo m (0 when gcd(a, m) != 1).
inline long long multiplicative_order(long long a, long long m) {
  a %= m;
  if (a < 0) a += m;
  long long x = a % m, k = 1;
  while (x != 1 % m) {
    x = x * a % m;
    if (++k > m) return 0;
  }
  return k;
}

}  // namespace iwasawa
