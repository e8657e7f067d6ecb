#ifndef DUF_GF2X_HPP
#define DUF_GF2X_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace duf::gf2x {

/// Binary polynomial, bit i of word w = coefficient of z^(64w + i).
/// Kept trimmed: no trailing zero words.
using Poly = std::vector<uint64_t>;

int deg(const Poly& p);
void trim(Poly& p);
Poly one();
Poly x_pow(unsigned k);
bool is_zero(const Poly& p);
bool is_one(const Poly& p);
bool get_bit(const Poly& p, unsigned i);

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(Poly base, uint64_t e, const Poly& m);
Poly gcd(Poly a, Poly b);

/// x^t + 1.
Poly x_pow_minus_one(uint64_t t);
/// t-th cyclotomic polynomial over F_2 (t odd); every irreducible factor has
/// degree ord_t(2) and its roots are the elements of exact order t.
Poly cyclotomic(uint64_t t);

std::string to_hex(const Poly& p);

} // namespace duf::gf2x

#endif
