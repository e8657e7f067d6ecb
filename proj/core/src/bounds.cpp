#include "duf/bounds.hpp"

#include "duf/error.hpp"

namespace duf {

namespace {

void require_congruence(uint64_t m) {
    if (m < 7 || m % 4 != 3)
        fail(errc::unsupported_degree, "bounds need m >= 7 with m = 3 mod 4");
}

BigInt pow2(unsigned e) { return BigInt(1) << e; }

BigInt d_omega(uint64_t d) {
    BigInt v = 1;
    for (uint64_t i = 2; i <= d; ++i) v *= i;
    return v << static_cast<unsigned>(d); // d! * 2^d
}

} // namespace

uint64_t morse_alpha_bound(uint64_t m) {
    require_congruence(m);
    BigInt v = BigInt(m - 3) * (BigInt(5) * m * m + BigInt(28) * m + 7);
    if (v % 64 != 0) fail(errc::invalid_argument, "bound numerator not divisible by 64");
    v /= 64;
    return static_cast<uint64_t>(v);
}

bool chebotarev_holds(uint64_t m, unsigned n, bool floor_surrogates) {
    require_congruence(m);
    const uint64_t d = (m - 1) / 2;
    const BigInt D = d_omega(d);
    const BigInt G = D * (2 * BigInt(d) - 3) / 2 + 1;
    const BigInt q = pow2(n);
    const BigInt s_half = pow2(floor_surrogates ? n / 2 : (n + 1) / 2);
    const BigInt s_quarter = pow2(floor_surrogates ? n / 4 : (n + 3) / 4);
    const BigInt lhs = q - 2 * ((D + G) * s_half + D * s_quarter + D + G);
    return lhs >= D;
}

BoundReport min_n_guarantee(uint64_t m) {
    require_congruence(m);
    const uint64_t d = (m - 1) / 2;
    if (d > 25) fail(errc::scale_error, "factorial growth: d capped at 25");

    BoundReport rep;
    rep.m = m;
    rep.d = d;
    rep.morse_alpha_bound = morse_alpha_bound(m);
    rep.d_omega_cap = d_omega(d);
    rep.genus_cap = rep.d_omega_cap * (2 * BigInt(d) - 3) / 2 + 1;

    const BigInt side = BigInt(rep.morse_alpha_bound) + 1;
    for (unsigned n = 1;; ++n) {
        if (n > 4096) fail(errc::scale_error, "no feasible n below 4096");
        if (!(pow2(n - 1) > side)) continue;
        if (chebotarev_holds(m, n)) {
            rep.min_n = n;
            return rep;
        }
    }
}

} // namespace duf
