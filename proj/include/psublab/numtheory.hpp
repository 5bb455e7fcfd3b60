#ifndef PSUBLAB_NUMTHEORY_HPP
#define PSUBLAB_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace psublab {

bool is_prime(long long n);

// Prime factorization as (prime, exponent) pairs, primes ascending.
// Trial division plus Pollard rho; valid for any positive 63-bit input.
std::vector<std::pair<long long, int>> factorize(long long n);

std::vector<long long> prime_divisors(long long n);

long long mulmod(long long a, long long b, long long m);
long long powmod(long long a, long long e, long long m);

}  // namespace psublab

#endif
