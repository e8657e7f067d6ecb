#ifndef DUF_BOUNDS_HPP
#define DUF_BOUNDS_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace duf {

using BigInt = boost::multiprecision::cpp_int;

/// (m-3)(5m^2+28m+7)/64 for m = 3 mod 4, m >= 7; divisibility by 64 is
/// asserted. This caps the number of alpha with a non-Morse decomposition.
uint64_t morse_alpha_bound(uint64_t m);

struct BoundReport {
    uint64_t m = 0;
    uint64_t d = 0;             ///< (m-1)/2
    uint64_t morse_alpha_bound = 0;
    BigInt d_omega_cap;         ///< d! * 2^d
    BigInt genus_cap;           ///< d_omega_cap * (2d-3)/2 + 1
    unsigned min_n = 0;
};

/// The place-counting inequality at q = 2^n with ceiling powers of two as
/// surrogates for q^(1/2) and q^(1/4); with floor_surrogates the optimistic
/// floor variant (used to bracket the rounding).
bool chebotarev_holds(uint64_t m, unsigned n, bool floor_surrogates = false);

/// Smallest n making both the place-counting inequality and the Morse-alpha
/// side condition 2^(n-1) > bound + 1 hold. Exact big-integer arithmetic; a
/// valid explicit threshold, not a claimed optimum.
BoundReport min_n_guarantee(uint64_t m);

} // namespace duf

#endif
