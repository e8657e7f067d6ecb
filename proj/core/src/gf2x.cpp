#include "duf/gf2x.hpp"

#include <algorithm>

#include "duf/error.hpp"
#include "duf/numt.hpp"

namespace duf::gf2x {

int deg(const Poly& p) {
    if (p.empty()) return -1;
    return static_cast<int>(64 * (p.size() - 1)) + 63 - __builtin_clzll(p.back());
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly one() { return Poly{1}; }

Poly x_pow(unsigned k) {
    Poly p(k / 64 + 1, 0);
    p[k / 64] = uint64_t{1} << (k % 64);
    return p;
}

bool is_zero(const Poly& p) { return p.empty(); }
bool is_one(const Poly& p) { return p.size() == 1 && p[0] == 1; }

bool get_bit(const Poly& p, unsigned i) {
    size_t w = i / 64;
    return w < p.size() && ((p[w] >> (i % 64)) & 1);
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = (i < a.size() ? a[i] : 0) ^ (i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

namespace {

// r ^= p << k
void xor_shifted(Poly& r, const Poly& p, unsigned k) {
    size_t off = k / 64;
    unsigned sh = k % 64;
    if (r.size() < p.size() + off + 1) r.resize(p.size() + off + 1, 0);
    for (size_t i = 0; i < p.size(); ++i) {
        r[i + off] ^= p[i] << sh;
        if (sh) r[i + off + 1] ^= p[i] >> (64 - sh);
    }
}

} // namespace

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size(), 0);
    for (size_t w = 0; w < a.size(); ++w) {
        uint64_t word = a[w];
        while (word) {
            unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
            xor_shifted(r, b, static_cast<unsigned>(64 * w) + bit);
            word &= word - 1;
        }
    }
    trim(r);
    return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    int db = deg(b);
    if (db < 0) fail(errc::division_by_zero, "division by zero polynomial");
    Poly rem = a, quot;
    trim(rem);
    int dr;
    while ((dr = deg(rem)) >= db) {
        unsigned sh = static_cast<unsigned>(dr - db);
        xor_shifted(quot, one(), sh);
        xor_shifted(rem, b, sh);
        trim(rem);
    }
    trim(quot);
    return {std::move(quot), std::move(rem)};
}

Poly mod(const Poly& a, const Poly& b) {
    int db = deg(b);
    if (db < 0) fail(errc::division_by_zero, "mod by zero polynomial");
    Poly rem = a;
    trim(rem);
    int dr;
    while ((dr = deg(rem)) >= db) {
        xor_shifted(rem, b, static_cast<unsigned>(dr - db));
        trim(rem);
    }
    return rem;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return mod(mul(a, b), m); }

Poly powmod(Poly base, uint64_t e, const Poly& m) {
    Poly r = mod(one(), m);
    base = mod(base, m);
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

Poly gcd(Poly a, Poly b) {
    while (!is_zero(b)) {
        Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly x_pow_minus_one(uint64_t t) {
    Poly p = x_pow(static_cast<unsigned>(t));
    p[0] ^= 1;
    return p;
}

Poly cyclotomic(uint64_t t) {
    if (t == 1) return x_pow_minus_one(1);
    auto fac = numt::factorize(t);
    // Moebius product over squarefree divisors d: (x^(t/d) - 1)^mu(d)
    Poly num = one(), den = one();
    size_t np = fac.size();
    for (size_t mask = 0; mask < (size_t{1} << np); ++mask) {
        uint64_t d = 1;
        for (size_t i = 0; i < np; ++i)
            if (mask & (size_t{1} << i)) d *= fac[i].first;
        bool mu_neg = __builtin_popcountll(mask) & 1;
        Poly term = x_pow_minus_one(t / d);
        (mu_neg ? den : num) = mul(mu_neg ? den : num, term);
    }
    auto [q, r] = divrem(num, den);
    if (!is_zero(r)) fail(errc::invalid_argument, "cyclotomic division not exact");
    return q;
}

std::string to_hex(const Poly& p) {
    if (p.empty()) return "0";
    std::string out;
    char buf[17];
    for (size_t i = p.size(); i-- > 0;) {
        snprintf(buf, sizeof buf, out.empty() ? "%llx" : "%016llx",
                 static_cast<unsigned long long>(p[i]));
        out += buf;
    }
    return out;
}

} // namespace duf::gf2x
