#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "duf/uniformity.hpp"

using namespace duf;

namespace {

// Independent oracle: tally f(x+a)+f(x) directly over the whole q^2 table,
// no derivative-row machinery shared with the implementation under test.
struct OracleResult {
    uint32_t delta = 0;
    uint64_t pairs = 0;
    std::map<uint64_t, std::map<uint64_t, uint32_t>> rows;
};

OracleResult ddt_oracle(const FqPoly& f) {
    const auto& ctx = f.ctx();
    const uint64_t q = ctx.elem_mask() + 1;
    OracleResult out;
    for (uint64_t a = 1; a < q; ++a) {
        auto& row = out.rows[a];
        for (uint64_t x = 0; x < q; ++x) {
            FqElem lhs = fq_add(eval(f, fq_add(FqElem{x}, FqElem{a})), eval(f, FqElem{x}));
            ++row[lhs.bits];
        }
        for (auto [beta, cnt] : row) {
            if (cnt > out.delta) {
                out.delta = cnt;
                out.pairs = 1;
            } else if (cnt == out.delta) {
                ++out.pairs;
            }
        }
    }
    // recount pairs at the final maximum
    out.pairs = 0;
    for (auto& [a, row] : out.rows)
        for (auto [beta, cnt] : row)
            if (cnt == out.delta) ++out.pairs;
    return out;
}

FqPoly rand_poly_deg(const FieldCtx& ctx, int deg, std::mt19937_64& rng) {
    std::vector<FqElem> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = FqElem{rng() & ctx.elem_mask()};
    while (c.back() == fq_zero) c.back() = FqElem{rng() & ctx.elem_mask()};
    return FqPoly(ctx, std::move(c));
}

} // namespace

TEST_CASE("DDT rows over F_8") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    FqPoly x3 = FqPoly::monomial(f8, 3);
    for (uint64_t a = 1; a < 8; ++a) {
        DdtRow row = ddt_row(x3, FqElem{a});
        int hit = 0;
        uint32_t sum = 0;
        for (uint32_t c : row) {
            CHECK(c % 2 == 0);
            if (c) {
                CHECK(c == 2); // APN
                ++hit;
            }
            sum += c;
        }
        CHECK(hit == 4);
        CHECK(sum == 8);
    }

    FqPoly x2 = FqPoly::monomial(f8, 2);
    for (uint64_t a = 1; a < 8; ++a) {
        DdtRow row = ddt_row(x2, FqElem{a});
        for (uint64_t b = 0; b < 8; ++b)
            CHECK(row[b] == (FqElem{b} == fq_sq(f8, FqElem{a}) ? 8 : 0));
    }

    DdtRow row7 = ddt_row(FqPoly::monomial(f8, 7), fq_one);
    CHECK(row7[0] == 6);
    CHECK(row7[1] == 2);
    for (uint64_t b = 2; b < 8; ++b) CHECK(row7[b] == 0);

    CHECK_THROWS_AS(ddt_row(x3, fq_zero), Error);
}

TEST_CASE("row sums and parity at random") {
    FieldCtx f = mk_field(5);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        FqPoly p = rand_poly_deg(f, 2 + static_cast<int>(rng() % 9), rng);
        FqElem a{1 + rng() % f.elem_mask()};
        DdtRow row = ddt_row(p, a);
        uint64_t sum = 0;
        for (uint32_t c : row) {
            CHECK(c % 2 == 0);
            sum += c;
        }
        CHECK(sum == f.elem_mask() + 1);
    }
}

TEST_CASE("delta oracle cases") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    FqPoly x3 = FqPoly::monomial(f8, 3);
    OracleResult o = ddt_oracle(x3);
    CHECK(o.delta == 2);
    DeltaResult r = delta(x3, true);
    CHECK(r.delta == 2);
    CHECK(r.achieving_pairs == o.pairs);

    FieldCtx f32 = mk_field(5);
    FqPoly x3b = FqPoly::monomial(f32, 3);
    OracleResult o32 = ddt_oracle(x3b);
    CHECK(o32.delta == 2);
    CHECK(delta(x3b, true).delta == 2);

    for (unsigned n : {3u, 4u, 6u}) {
        FieldCtx f = mk_field(n);
        DeltaResult rx2 = delta(FqPoly::monomial(f, 2), true);
        CHECK(rx2.delta == f.elem_mask() + 1);
    }

    DeltaResult r7 = delta(FqPoly::monomial(f8, 7), true);
    CHECK(r7.delta == 6);
    CHECK(r7.achieving_pairs == 7);
    CHECK(r7.exact);

    CHECK_THROWS_AS(delta(FqPoly::constant(f8, fq_one), false), Error);
}

TEST_CASE("fast mode agrees with the oracle") {
    FieldCtx f = mk_field(4);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 40; ++i) {
        FqPoly p = rand_poly_deg(f, 2 + static_cast<int>(rng() % 8), rng);
        OracleResult o = ddt_oracle(p);
        DeltaResult fast = delta(p, false);
        DeltaResult exact = delta(p, true);
        CHECK(fast.delta == o.delta);
        CHECK(exact.delta == o.delta);
        CHECK(exact.achieving_pairs == o.pairs);
        CHECK(exact.exact);
        CHECK(fast.achieving_pairs >= 1);
        CHECK(exact.delta % 2 == 0); // parity
        if (p.degree() % 2 == 1) CHECK(exact.delta <= static_cast<uint32_t>(p.degree() - 1));
    }
}

TEST_CASE("achieving fractions") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    Fraction fr = achieving_fraction(FqPoly::monomial(f8, 7));
    CHECK(fr == Fraction{7, 64});
    // epsilon constant for m = 7: 1/(d! 2^(d+1)) = 1/96 with d = 3
    uint64_t d = 3, eps_den = 1;
    for (uint64_t i = 2; i <= d; ++i) eps_den *= i;
    eps_den <<= (d + 1);
    CHECK(eps_den == 96);
    for (unsigned n : {3u, 4u, 5u}) {
        FieldCtx f = mk_field(n);
        Fraction fx2 = achieving_fraction(FqPoly::monomial(f, 2));
        uint64_t q = f.elem_mask() + 1;
        uint64_t num = q - 1, den = q * q, g = std::gcd(num, den);
        CHECK(fx2 == Fraction{num / g, den / g});
    }
}

TEST_CASE("simple splitting") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    CHECK(splits_simply(FqPoly::monomial(f8, 7), fq_one, fq_zero));
    for (uint64_t a = 1; a < 8; ++a)
        for (uint64_t b = 0; b < 8; ++b)
            CHECK_FALSE(splits_simply(FqPoly::monomial(f8, 2), FqElem{a}, FqElem{b}));

    FqPoly x3 = FqPoly::monomial(f8, 3);
    for (uint64_t a = 1; a < 8; ++a) {
        DdtRow row = ddt_row(x3, FqElem{a});
        for (uint64_t b = 0; b < 8; ++b)
            CHECK(splits_simply(x3, FqElem{a}, FqElem{b}) == (row[b] == 2));
    }

    // splits_simply forces the row count to the derivative degree
    FieldCtx f = mk_field(4);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
        FqPoly p = rand_poly_deg(f, 3 + static_cast<int>(rng() % 7), rng);
        FqElem a{1 + rng() % f.elem_mask()};
        DdtRow row = ddt_row(p, a);
        FqPoly D = d_alpha(p, a);
        for (uint64_t b = 0; b < 16; ++b)
            if (splits_simply(p, FqElem{a}, FqElem{b}))
                CHECK(row[b] == static_cast<uint32_t>(D.degree()));
    }
    CHECK_THROWS_AS(splits_simply(x3, fq_zero, fq_zero), Error);
}

TEST_CASE("delta is invariant under constant and argument shifts") {
    FieldCtx f = mk_field(4);
    std::mt19937_64 rng(33);
    for (int i = 0; i < 30; ++i) {
        FqPoly p = rand_poly_deg(f, 2 + static_cast<int>(rng() % 8), rng);
        FqElem c{rng() & f.elem_mask()};
        uint32_t base = delta(p, true).delta;
        CHECK(delta(add(p, FqPoly::constant(f, c)), true).delta == base);
        CHECK(delta(taylor_shift(p, c), true).delta == base);
    }
}

TEST_CASE("even-degree upper bound") {
    // m = 0 mod 4 with a1 != 0: every derivative has degree exactly m-2
    FieldCtx f = mk_field(4);
    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
        FqPoly p = rand_poly_deg(f, 8, rng);
        if (p.coeff(7) == fq_zero) continue;
        CHECK(delta(p, true).delta <= 6);
    }
}

TEST_CASE("per-alpha maxima and determinism across threads") {
    FieldCtx f = mk_field(4);
    std::mt19937_64 rng(55);
    FqPoly p = rand_poly_deg(f, 7, rng);
    DeltaResult r1 = delta(p, true, true, 1);
    DeltaResult r2 = delta(p, true, true, 3);
    CHECK(r1.delta == r2.delta);
    CHECK(r1.achieving_pairs == r2.achieving_pairs);
    CHECK_FALSE(r1.per_alpha_partial);
    REQUIRE(r1.per_alpha_max.size() == 15);
    CHECK(r1.per_alpha_max == r2.per_alpha_max);
    for (uint64_t a = 1; a <= 15; ++a) {
        DdtRow row = ddt_row(p, FqElem{a});
        uint32_t mx = 0;
        for (uint32_t c : row) mx = std::max(mx, c);
        CHECK(r1.per_alpha_max[a - 1] == mx);
    }
}

TEST_CASE("scale refusal") {
    FieldCtx f = mk_field(29);
    FqPoly p = FqPoly::monomial(f, 3);
    CHECK_THROWS_AS(ddt_row(p, fq_one), Error);
    CHECK_THROWS_AS(delta(p, false), Error);
    try {
        delta(p, false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::scale_error);
    }
}
