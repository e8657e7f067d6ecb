#include "duf/field.hpp"

#include <algorithm>
#include <charconv>

#include "duf/numt.hpp"

namespace duf {

namespace {

using u128 = unsigned __int128;

// Carryless product of two 64-bit GF(2) polynomials.
u128 clmul(uint64_t a, uint64_t b) {
    u128 acc = 0;
    while (b) {
        acc ^= static_cast<u128>(a) << __builtin_ctzll(b);
        b &= b - 1;
    }
    return acc;
}

int deg128(u128 v) {
    if (v == 0) return -1;
    uint64_t hi = static_cast<uint64_t>(v >> 64);
    if (hi) return 64 + 63 - __builtin_clzll(hi);
    return 63 - __builtin_clzll(static_cast<uint64_t>(v));
}

// Reduce a GF(2) polynomial of degree < 128 modulo x^n + tail.
uint64_t reduce128(u128 v, unsigned n, uint64_t tail) {
    u128 mod_full = (static_cast<u128>(1) << n) | tail;
    int d;
    while ((d = deg128(v)) >= static_cast<int>(n)) v ^= mod_full << (d - n);
    return static_cast<uint64_t>(v);
}

uint64_t gf2_mulmod(uint64_t a, uint64_t b, unsigned n, uint64_t tail) {
    return reduce128(clmul(a, b), n, tail);
}

// x^(2^k) mod (x^n + tail), starting from `from`.
uint64_t frob_iter(uint64_t from, unsigned k, unsigned n, uint64_t tail) {
    uint64_t v = from;
    for (unsigned i = 0; i < k; ++i) v = gf2_mulmod(v, v, n, tail);
    return v;
}

uint64_t gf2_gcd(uint64_t a, uint64_t b) {
    while (b) {
        int da, db;
        while ((da = (a ? 63 - __builtin_clzll(a) : -1)) >= (db = 63 - __builtin_clzll(b))) {
            a ^= b << (da - db);
            if (!a) break;
        }
        std::swap(a, b);
    }
    return a;
}

} // namespace

bool gf2_poly_irreducible(unsigned n, uint64_t tail) {
    if (n == 0) return false;
    if ((tail & 1) == 0) return false; // divisible by x (constant term unset)
    if (n == 1) return tail == 1;      // x + 1
    // Rabin: x^(2^n) == x mod f, and gcd(x^(2^(n/p)) + x, f) == 1 for prime p | n.
    uint64_t x = 2; // encoding of x, already reduced since n >= 2
    uint64_t xq = frob_iter(x, n, n, tail);
    if (xq != x) return false;
    for (auto [p, e] : numt::factorize(n)) {
        (void)e;
        uint64_t xs = frob_iter(x, n / static_cast<unsigned>(p), n, tail);
        uint64_t full = (n < 64) ? (tail | (uint64_t{1} << n)) : 0;
        uint64_t g;
        if (n < 64) {
            g = gf2_gcd(xs ^ x, full);
        } else {
            // f has degree 64; xs ^ x has degree < 64, so gcd(f, xs^x) = gcd(xs^x, f mod (xs^x)).
            uint64_t r = xs ^ x;
            if (r == 0) return false;
            // reduce f = x^64 + tail modulo r by long division
            int dr = 63 - __builtin_clzll(r);
            u128 f128 = (static_cast<u128>(1) << 64) | tail;
            int d;
            while ((d = deg128(f128)) >= dr) f128 ^= static_cast<u128>(r) << (d - dr);
            g = gf2_gcd(r, static_cast<uint64_t>(f128));
        }
        if (g != 1) return false;
    }
    return true;
}

uint64_t smallest_irreducible_tail(unsigned n) {
    if (n == 1) return 1; // x + 1 (x itself is excluded: constant term must be set for n>1 anyway)
    for (uint64_t tail = 1; tail < (uint64_t{1} << n); tail += 2)
        if (gf2_poly_irreducible(n, tail)) return tail;
    fail(errc::modulus_error, "no irreducible found (unreachable)");
}

FieldCtx mk_field(unsigned n, std::optional<uint64_t> modulus) {
    if (n < 1 || n > 64) fail(errc::invalid_argument, "extension degree must be in 1..64");
    uint64_t tail;
    if (modulus) {
        uint64_t m = *modulus;
        if (n == 64) {
            tail = m; // leading x^64 bit implicit
        } else {
            if ((m >> n) != 1)
                fail(errc::modulus_error, "modulus encoding must have degree exactly n");
            tail = m & ((uint64_t{1} << n) - 1);
        }
        if ((tail & 1) == 0 && !(n == 1 && tail == 1))
            fail(errc::modulus_error, "constant term unset: divisible by x");
        if (!gf2_poly_irreducible(n, tail))
            fail(errc::modulus_error, "modulus is reducible");
    } else {
        tail = smallest_irreducible_tail(n);
    }

    FieldCtx ctx;
    ctx.n_ = n;
    ctx.tail_ = tail;
    ctx.mask_ = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    ctx.order_ = ctx.mask_; // 2^n - 1
    // shift-and-reduce product usable before tables exist
    auto raw_mul = [&](uint64_t a, uint64_t b) { return gf2_mulmod(a, b, n, tail); };
    auto raw_pow = [&](uint64_t a, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    // smallest-encoding primitive element
    if (ctx.order_ == 1) {
        ctx.gen_ = fq_one;
    } else {
        auto fac = numt::factorize(ctx.order_);
        for (uint64_t cand = 2;; ++cand) {
            bool primitive = true;
            for (auto [p, e] : fac) {
                (void)e;
                if (raw_pow(cand, ctx.order_ / p) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                ctx.gen_ = FqElem{cand};
                break;
            }
        }
    }

    if (n <= 20) {
        auto t = std::make_shared<FieldCtx::Tables>();
        uint64_t q1 = ctx.order_;
        t->log.assign(ctx.mask_ + 1, 0);
        t->antilog.assign(2 * q1, 0);
        uint64_t v = 1;
        for (uint64_t i = 0; i < q1; ++i) {
            t->antilog[i] = v;
            t->antilog[i + q1] = v;
            t->log[v] = static_cast<uint32_t>(i);
            v = raw_mul(v, ctx.gen_.bits);
        }
        ctx.tables_ = std::move(t);
    }
    return ctx;
}

std::string FieldCtx::modulus_hex() const {
    char buf[20];
    if (n_ == 64) {
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, tail_, 16);
        std::string low(buf, p);
        return "1" + std::string(16 - low.size(), '0') + low;
    }
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, modulus_full(), 16);
    return std::string(buf, p);
}

FqElem fq_mul(const FieldCtx& ctx, FqElem a, FqElem b) {
    if (a.bits == 0 || b.bits == 0) return fq_zero;
    if (ctx.tables_) {
        const auto& t = *ctx.tables_;
        return FqElem{t.antilog[t.log[a.bits] + t.log[b.bits]]};
    }
    return FqElem{gf2_mulmod(a.bits, b.bits, ctx.n_, ctx.tail_)};
}

FqElem fq_sq(const FieldCtx& ctx, FqElem a) { return fq_mul(ctx, a, a); }

FqElem fq_pow(const FieldCtx& ctx, FqElem a, uint64_t e) {
    FqElem r = fq_one;
    while (e) {
        if (e & 1) r = fq_mul(ctx, r, a);
        a = fq_sq(ctx, a);
        e >>= 1;
    }
    return r;
}

FqElem fq_inv(const FieldCtx& ctx, FqElem a) {
    if (a.bits == 0) fail(errc::division_by_zero, "inverse of zero");
    if (ctx.n() == 1) return a;
    return fq_pow(ctx, a, ctx.group_order() - 1); // a^(2^n - 2)
}

int fq_trace(const FieldCtx& ctx, FqElem a) {
    FqElem acc = a, frob = a;
    for (unsigned i = 1; i < ctx.n(); ++i) {
        frob = fq_sq(ctx, frob);
        acc = fq_add(acc, frob);
    }
    // the trace lands in F_2
    return acc == fq_one ? 1 : 0;
}

std::optional<FqElem> solve_artin_schreier(const FieldCtx& ctx, FqElem alpha, FqElem beta) {
    if (alpha.bits == 0) fail(errc::degenerate_equation, "alpha must be nonzero");
    // Substitute x = alpha*z: z^2 + z = beta/alpha^2 =: c, then solve the
    // F_2-linear system for z -> z^2 + z (kernel {0,1}).
    const unsigned n = ctx.n();
    FqElem c = fq_mul(ctx, beta, fq_sq(ctx, fq_inv(ctx, alpha)));

    // rows[i] = bit mask of equation for coordinate i, rhs bit alongside
    std::vector<uint64_t> col(n);
    for (unsigned j = 0; j < n; ++j) {
        FqElem ej{uint64_t{1} << j};
        col[j] = fq_add(fq_sq(ctx, ej), ej).bits;
    }
    std::vector<uint64_t> row(n, 0);
    std::vector<int> rhs(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        uint64_t r = 0;
        for (unsigned j = 0; j < n; ++j) r |= ((col[j] >> i) & 1) << j;
        row[i] = r;
        rhs[i] = static_cast<int>((c.bits >> i) & 1);
    }
    // Gaussian elimination over F_2
    std::vector<int> pivot_col;
    unsigned rank_row = 0;
    std::vector<int> where(n, -1);
    for (unsigned jc = 0; jc < n && rank_row < n; ++jc) {
        unsigned sel = rank_row;
        while (sel < n && ((row[sel] >> jc) & 1) == 0) ++sel;
        if (sel == n) continue;
        std::swap(row[sel], row[rank_row]);
        std::swap(rhs[sel], rhs[rank_row]);
        for (unsigned i = 0; i < n; ++i) {
            if (i != rank_row && ((row[i] >> jc) & 1)) {
                row[i] ^= row[rank_row];
                rhs[i] ^= rhs[rank_row];
            }
        }
        where[jc] = static_cast<int>(rank_row);
        ++rank_row;
    }
    for (unsigned i = rank_row; i < n; ++i)
        if (rhs[i]) return std::nullopt; // inconsistent: trace obstruction
    uint64_t z = 0;
    for (unsigned jc = 0; jc < n; ++jc)
        if (where[jc] >= 0 && rhs[where[jc]]) z |= uint64_t{1} << jc;
    FqElem x1 = fq_mul(ctx, alpha, FqElem{z});
    FqElem x2 = fq_add(x1, alpha);
    return std::min(x1, x2);
}

FqElem element_of_order(const FieldCtx& ctx, uint64_t t) {
    if (t == 0 || ctx.group_order() % t != 0)
        fail(errc::order_error, "order must divide 2^n - 1");
    return fq_pow(ctx, ctx.generator(), ctx.group_order() / t);
}

std::string to_hex(FqElem a) {
    char buf[17];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, a.bits, 16);
    return std::string(buf, p);
}

FqElem elem_from_hex(const FieldCtx& ctx, std::string_view hex) {
    uint64_t v = 0;
    auto res = std::from_chars(hex.data(), hex.data() + hex.size(), v, 16);
    if (res.ec != std::errc{} || res.ptr != hex.data() + hex.size())
        fail(errc::invalid_argument, "bad element hex: " + std::string(hex));
    if (ctx.n() < 64 && v > ctx.elem_mask())
        fail(errc::invalid_argument, "element out of range for field");
    return FqElem{v};
}

FieldCtx parse_field_spec(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view npart = spec.substr(0, colon);
    unsigned n = 0;
    auto res = std::from_chars(npart.data(), npart.data() + npart.size(), n);
    if (res.ec != std::errc{} || res.ptr != npart.data() + npart.size())
        fail(errc::invalid_argument, "bad field spec: " + std::string(spec));
    if (colon == std::string_view::npos) return mk_field(n);
    std::string_view mpart = spec.substr(colon + 1);
    if (n == 64) {
        // full 65-bit encoding: leading "1" followed by 16 hex digits
        if (mpart.size() == 17 && mpart.front() == '1') mpart.remove_prefix(1);
        else if (mpart.size() > 16)
            fail(errc::modulus_error, "degree-64 modulus must be 1 followed by 16 hex digits");
        uint64_t tail = 0;
        auto r2 = std::from_chars(mpart.data(), mpart.data() + mpart.size(), tail, 16);
        if (r2.ec != std::errc{} || r2.ptr != mpart.data() + mpart.size())
            fail(errc::invalid_argument, "bad modulus hex");
        return mk_field(64, tail);
    }
    uint64_t full = 0;
    auto r2 = std::from_chars(mpart.data(), mpart.data() + mpart.size(), full, 16);
    if (r2.ec != std::errc{} || r2.ptr != mpart.data() + mpart.size())
        fail(errc::invalid_argument, "bad modulus hex");
    return mk_field(n, full);
}

} // namespace duf
