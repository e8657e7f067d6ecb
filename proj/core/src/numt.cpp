#include "duf/numt.hpp"

#include <algorithm>
#include <numeric>

#include "duf/error.hpp"

namespace duf::numt {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sufficient witness set for all 64-bit integers.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a % n, d, n);
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

uint64_t pollard_rho(uint64_t n) {
    if ((n & 1) == 0) return 2;
    // gcd per step, not batched: a batched product can absorb both copies of
    // a prime-square factor and collapse to 0 mod n
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        auto f = [&](uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = f(x);
            y = f(f(y));
            uint64_t diff = x > y ? x - y : y - x;
            d = diff ? std::gcd(diff, n) : n;
        } while (d == 1);
        if (d != n) return d;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
    std::vector<uint64_t> primes;
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1});
    }
    return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> divs{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = divs.size();
        uint64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

uint64_t mul_order(uint64_t a, uint64_t m) {
    if (m == 0 || std::gcd(a % m, m) != 1)
        fail(errc::invalid_argument, "mul_order requires gcd(a,m)=1");
    if (m == 1) return 1;
    uint64_t x = a % m, k = 1;
    while (x != 1) {
        x = mulmod(x, a, m);
        ++k;
    }
    return k;
}

} // namespace duf::numt

namespace duf {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::modulus_error: return "ModulusError";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::order_error: return "OrderError";
        case errc::degenerate_equation: return "DegenerateEquation";
        case errc::zero_direction: return "ZeroDirection";
        case errc::not_t_alpha_invariant: return "NotTAlphaInvariant";
        case errc::degenerate_leading: return "DegenerateLeading";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::undefined_resultant: return "UndefinedResultant";
        case errc::not_a_polynomial_map: return "NotAPolynomialMap";
        case errc::unsupported_degree: return "UnsupportedDegree";
        case errc::field_too_large: return "FieldTooLarge";
        case errc::not_odd: return "NotOdd";
        case errc::not_odd_prime: return "NotOddPrime";
        case errc::ineligible_prime: return "IneligiblePrime";
        case errc::m_not_member: return "MNotMember";
        case errc::scale_error: return "ScaleError";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "Error";
}

} // namespace duf
