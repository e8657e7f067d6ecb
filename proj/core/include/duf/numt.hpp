#ifndef DUF_NUMT_HPP
#define DUF_NUMT_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace duf::numt {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(uint64_t n);

/// Prime factorization (Pollard rho), sorted by prime.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

std::vector<uint64_t> divisors(uint64_t n);

/// Multiplicative order of a modulo m (gcd(a,m) must be 1). O(order) loop.
uint64_t mul_order(uint64_t a, uint64_t m);

} // namespace duf::numt

#endif
