#include "psublab/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace psublab {

long long mulmod(long long a, long long b, long long m) {
  return (long long)((__int128)a * b % m);
}

long long powmod(long long a, long long e, long long m) {
  long long r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Deterministic Miller-Rabin witness set for 64-bit inputs.
  for (long long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    long long x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

long long pollard_rho(long long n) {
  if (n % 2 == 0) return 2;
  for (long long c = 1;; ++c) {
    auto f = [&](long long x) { return (mulmod(x, x, n) + c) % n; };
    long long x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(std::abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_rec(long long n, std::vector<long long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  long long d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<long long> primes;
  for (long long p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<long long, int>> out;
  for (long long p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

}  // namespace psublab
