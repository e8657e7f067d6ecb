#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "duf/poly.hpp"
#include "support/embedding.hpp"

using namespace duf;

namespace {

FqPoly rand_poly(const FieldCtx& ctx, int maxdeg, std::mt19937_64& rng, bool monic_nonzero = false) {
    int d = static_cast<int>(rng() % static_cast<uint64_t>(maxdeg + 1));
    std::vector<FqElem> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = FqElem{rng() & ctx.elem_mask()};
    if (monic_nonzero) c.back() = fq_one;
    return FqPoly(ctx, std::move(c));
}

// Pascal's triangle mod 2, independent of the Lucas shortcut used in the
// library.
std::vector<std::vector<int>> pascal_mod2(int rows) {
    std::vector<std::vector<int>> c(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        c[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 0);
        c[static_cast<size_t>(i)][0] = 1;
        c[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        for (int j = 1; j < i; ++j)
            c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] ^
                c[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
    return c;
}

// Coefficient of u^j in f(x+u), computed from Pascal parities.
FqPoly hasse_oracle(const FqPoly& f, int j, const std::vector<std::vector<int>>& pasc) {
    if (f.degree() < j) return FqPoly(f.ctx());
    std::vector<FqElem> out(static_cast<size_t>(f.degree() - j) + 1, fq_zero);
    for (int k = j; k <= f.degree(); ++k)
        if (pasc[static_cast<size_t>(k)][static_cast<size_t>(j)])
            out[static_cast<size_t>(k - j)] = f.coeff(k);
    return FqPoly(f.ctx(), std::move(out));
}

} // namespace

TEST_CASE("taylor shift") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    for (uint64_t a = 0; a < 8; ++a) {
        FqPoly x2 = FqPoly::monomial(f8, 2);
        FqPoly shifted = taylor_shift(x2, FqElem{a});
        CHECK(shifted == FqPoly(f8, {fq_sq(f8, FqElem{a}), fq_zero, fq_one}));
        FqPoly x4 = FqPoly::monomial(f8, 4);
        CHECK(taylor_shift(x4, FqElem{a}) ==
              FqPoly(f8, {fq_pow(f8, FqElem{a}, 4), fq_zero, fq_zero, fq_zero, fq_one}));
    }
    FqPoly x3 = FqPoly::monomial(f8, 3);
    CHECK(taylor_shift(x3, fq_one) == FqPoly(f8, {fq_one, fq_one, fq_one, fq_one}));

    // f(x + a + b) = (f(x+a))(x+b), and evaluation agrees pointwise
    FieldCtx f = mk_field(6);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
        FqPoly p = rand_poly(f, 12, rng);
        FqElem a{rng() & f.elem_mask()}, b{rng() & f.elem_mask()};
        CHECK(taylor_shift(taylor_shift(p, a), b) == taylor_shift(p, fq_add(a, b)));
        FqElem x{rng() & f.elem_mask()};
        CHECK(eval(taylor_shift(p, a), x) == eval(p, fq_add(x, a)));
    }
}

TEST_CASE("derivative") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    CHECK(derivative(FqPoly::monomial(f8, 2)).is_zero());
    CHECK(derivative(FqPoly(f8, {fq_one, fq_one, fq_zero, fq_one})) ==
          FqPoly(f8, {fq_one, fq_zero, fq_one})); // (x^3+x+1)' = x^2+1
    CHECK(derivative(FqPoly::monomial(f8, 7)) == FqPoly::monomial(f8, 6));

    FieldCtx f = mk_field(5);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        FqPoly a = rand_poly(f, 9, rng), b = rand_poly(f, 9, rng);
        CHECK(derivative(mul(a, b)) == add(mul(derivative(a), b), mul(a, derivative(b))));
    }
}

TEST_CASE("second Hasse-Schmidt derivative") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    CHECK(hasse2(FqPoly::monomial(f8, 2)) == FqPoly::constant(f8, fq_one));
    CHECK(hasse2(FqPoly::monomial(f8, 3)) == FqPoly::monomial(f8, 1));
    CHECK(hasse2(FqPoly::monomial(f8, 4)).is_zero());

    // compare u^0, u^1, u^2 coefficients of f(x+u) against the Pascal oracle,
    // then spot-check the full expansion numerically
    FieldCtx f = mk_field(7);
    auto pasc = pascal_mod2(32);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        FqPoly p = rand_poly(f, 30, rng);
        CHECK(hasse_oracle(p, 0, pasc) == p);
        CHECK(hasse_oracle(p, 1, pasc) == derivative(p));
        CHECK(hasse_oracle(p, 2, pasc) == hasse2(p));
        for (int k = 0; k < 10; ++k) {
            FqElem t{rng() & f.elem_mask()}, u{rng() & f.elem_mask()};
            FqElem lhs = eval(p, fq_add(t, u));
            FqElem rhs = fq_zero, upow = fq_one;
            for (int j = 0; j <= p.degree(); ++j) {
                rhs = fq_add(rhs, fq_mul(f, eval(hasse_oracle(p, j, pasc), t), upow));
                upow = fq_mul(f, upow, u);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("resultant") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        FqElem a{rng() & 7}, b{rng() & 7};
        FqPoly pa(f8, {a, fq_one}), pb(f8, {b, fq_one});
        CHECK(resultant(pa, pb) == fq_add(a, b));
    }
    FqPoly sq(f8, {fq_one, fq_zero, fq_one}); // (y+1)^2
    CHECK(resultant(sq, FqPoly::monomial(f8, 1)) == fq_one);
    CHECK(resultant(FqPoly(f8, {fq_zero, fq_one, fq_one}), FqPoly::monomial(f8, 1)) == fq_zero);
    CHECK_THROWS_AS(resultant(FqPoly(f8), FqPoly(f8)), Error);

    FieldCtx f = mk_field(4);
    for (int i = 0; i < 400; ++i) {
        FqPoly a = rand_poly(f, 7, rng), b = rand_poly(f, 7, rng);
        if (a.is_zero() || b.is_zero() || a.degree() + b.degree() == 0) continue;
        bool res_zero = resultant(a, b) == fq_zero;
        bool common = gcd_monic(a, b).degree() >= 1;
        CHECK(res_zero == common);
    }
}

TEST_CASE("radical") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    CHECK(radical(FqPoly::monomial(f8, 2)) == FqPoly::monomial(f8, 1));
    CHECK(radical(FqPoly(f8, {fq_one, fq_zero, fq_one})) == FqPoly(f8, {fq_one, fq_one}));
    CHECK(radical(FqPoly(f8, {fq_zero, fq_zero, fq_one, fq_one})) ==
          FqPoly(f8, {fq_zero, fq_one, fq_one})); // x^3+x^2 -> x^2+x
    CHECK_THROWS_AS(radical(FqPoly(f8)), Error);

    FieldCtx f = mk_field(3);
    std::mt19937_64 rng(47);
    for (int i = 0; i < 250; ++i) {
        FqPoly p = rand_poly(f, 8, rng);
        if (p.is_zero() || p.degree() == 0) continue;
        FqPoly r = radical(p);
        CHECK(divrem(p, r).second.is_zero()); // divides
        // squarefree: coprime with own derivative and not itself a square
        FqPoly rp = derivative(r);
        if (r.degree() >= 1) {
            CHECK_FALSE(rp.is_zero());
            CHECK(gcd_monic(r, rp).degree() == 0);
        }
        // same root set in the base field and in a quadratic extension
        auto emb = testsupport::make_embedding(f, 2);
        auto as_set = [](const std::vector<FqElem>& v) { return std::set<FqElem>(v.begin(), v.end()); };
        CHECK(as_set(roots_in_field(p)) == as_set(roots_in_field(r)));
        CHECK(as_set(roots_in_field(emb.lift(p))) == as_set(roots_in_field(emb.lift(r))));
    }
}

TEST_CASE("roots in the base field") {
    FieldCtx f2 = mk_field(1);
    FqPoly irr(f2, {fq_one, fq_one, fq_zero, fq_one});
    CHECK(roots_in_field(irr).empty());

    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    FqPoly xx(f8, {fq_zero, fq_one, fq_one});
    auto r = roots_in_field(xx);
    CHECK(r == std::vector<FqElem>{fq_zero, fq_one});
    FqPoly lifted(f8, {fq_one, fq_one, fq_zero, fq_one});
    CHECK(roots_in_field(lifted) == std::vector<FqElem>{FqElem{2}, FqElem{4}, FqElem{6}});

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        FqPoly p = rand_poly(f8, 9, rng);
        if (p.is_zero()) continue;
        CHECK(roots_in_field(p).size() <= static_cast<size_t>(p.degree()));
    }
    CHECK_THROWS_AS(roots_in_field(FqPoly(f8)), Error);
}

TEST_CASE("division and gcd") {
    FieldCtx f = mk_field(5);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        FqPoly a = rand_poly(f, 10, rng), b = rand_poly(f, 6, rng);
        if (b.is_zero()) continue;
        auto [q, r] = divrem(a, b);
        CHECK(add(mul(q, b), r) == a);
        CHECK(r.degree() < b.degree());
        FqPoly g = gcd_monic(a, b);
        if (!a.is_zero()) CHECK(divrem(a, g).second.is_zero());
        CHECK(divrem(b, g).second.is_zero());
    }
    CHECK_THROWS_AS(divrem(rand_poly(f, 3, rng), FqPoly(f)), Error);
}

TEST_CASE("poly square root") {
    FieldCtx f = mk_field(6);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        FqPoly p = rand_poly(f, 7, rng);
        FqPoly p2 = mul(p, p);
        if (p2.is_zero()) continue;
        CHECK(poly_sqrt(p2) == p);
    }
    CHECK_THROWS_AS(poly_sqrt(FqPoly::monomial(f, 3)), Error);
}

TEST_CASE("string round trip, highest degree first") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    FqPoly x7 = FqPoly::from_string(f8, "1,0,0,0,0,0,0,0");
    CHECK(x7 == FqPoly::monomial(f8, 7));
    CHECK(x7.to_string() == "1,0,0,0,0,0,0,0");
    FqPoly p = FqPoly::from_string(f8, "3,0,5");
    CHECK(p.coeff(2) == FqElem{3});
    CHECK(p.coeff(0) == FqElem{5});
    CHECK(FqPoly::from_string(f8, "0").is_zero());
    CHECK(FqPoly(f8).to_string() == "0");
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        FqPoly q = rand_poly(f8, 12, rng);
        if (q.is_zero()) continue;
        CHECK(FqPoly::from_string(f8, q.to_string()) == q);
    }
}
