#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "duf/field.hpp"
#include "duf/numt.hpp"

using namespace duf;

namespace {

// Test-side irreducibility oracle: trial division by every lower-degree
// binary polynomial.
bool irreducible_by_trial_division(unsigned n, uint64_t full) {
    if (n == 0) return false;
    for (unsigned dd = 1; dd <= n / 2; ++dd) {
        for (uint64_t g = (uint64_t{1} << dd); g < (uint64_t{1} << (dd + 1)); ++g) {
            // long-division remainder of full by g
            uint64_t r = full;
            while (true) {
                int dr = r ? 63 - __builtin_clzll(r) : -1;
                if (dr < static_cast<int>(dd)) break;
                r ^= g << (dr - static_cast<int>(dd));
            }
            if (r == 0) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("default moduli are the smallest irreducible encodings") {
    // exhaustive scan over encodings 8..15 picks 0x0B for n = 3
    uint64_t expect3 = 0;
    for (uint64_t enc = 8; enc < 16; ++enc)
        if (irreducible_by_trial_division(3, enc)) {
            expect3 = enc;
            break;
        }
    CHECK(expect3 == 0x0B);
    CHECK(mk_field(3).modulus_full() == expect3);
    CHECK(mk_field(1).modulus_full() == 0x3);

    for (unsigned n = 2; n <= 14; ++n) {
        uint64_t full = mk_field(n).modulus_full();
        CHECK(irreducible_by_trial_division(n, full));
        for (uint64_t enc = (uint64_t{1} << n) + 1; enc < full; enc += 2)
            CHECK_FALSE(irreducible_by_trial_division(n, enc));
    }
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(mk_field(4, uint64_t{0x18}), Error);
    try {
        mk_field(4, uint64_t{0x18}); // bit 0 unset: divisible by x
    } catch (const Error& e) {
        CHECK(e.code() == errc::modulus_error);
    }
    CHECK_THROWS_AS(mk_field(4, uint64_t{0x15}), Error); // (x^2+x+1)^2
    CHECK_NOTHROW(mk_field(4, uint64_t{0x13}));
    CHECK_THROWS_AS(mk_field(0), Error);
    CHECK_THROWS_AS(mk_field(65), Error);
    CHECK_THROWS_AS(mk_field(4, uint64_t{0x0B}), Error); // wrong degree
}

TEST_CASE("multiplication in F_8") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    CHECK(fq_mul(f8, FqElem{0x02}, FqElem{0x02}) == FqElem{0x04});
    CHECK(fq_mul(f8, FqElem{0x02}, FqElem{0x04}) == FqElem{0x03});
    for (uint64_t e = 0; e < 8; ++e) CHECK(fq_mul(f8, FqElem{e}, fq_one) == FqElem{e});
}

TEST_CASE("table and shift-reduce products agree") {
    // n = 11 has tables; rebuild the products against a by-hand peasant loop
    FieldCtx f = mk_field(11);
    std::mt19937_64 rng(7);
    auto slow_mul = [&](uint64_t a, uint64_t b) {
        uint64_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            uint64_t carry = a >> 10;
            a = (a << 1) & f.elem_mask();
            if (carry) a ^= f.modulus_tail();
            b >>= 1;
        }
        return r;
    };
    for (int i = 0; i < 2000; ++i) {
        uint64_t a = rng() & f.elem_mask(), b = rng() & f.elem_mask();
        CHECK(fq_mul(f, FqElem{a}, FqElem{b}).bits == slow_mul(a, b));
    }
}

TEST_CASE("inverses") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    CHECK(fq_inv(f8, fq_one) == fq_one);
    CHECK(fq_inv(f8, FqElem{0x02}) == FqElem{0x05});
    CHECK_THROWS_AS(fq_inv(f8, fq_zero), Error);

    for (unsigned n : {1u, 2u, 5u, 8u, 23u, 47u, 64u}) {
        FieldCtx f = mk_field(n);
        std::mt19937_64 rng(n);
        for (int i = 0; i < 50; ++i) {
            uint64_t a = rng() & f.elem_mask();
            if (!a) continue;
            CHECK(fq_mul(f, FqElem{a}, fq_inv(f, FqElem{a})) == fq_one);
        }
    }
}

TEST_CASE("trace basics") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    CHECK(fq_trace(f8, fq_zero) == 0);
    CHECK(fq_trace(f8, fq_one) == 1); // Tr(1) = n mod 2
    CHECK(fq_trace(f8, FqElem{0x02}) == 0);

    for (unsigned n : {2u, 3u, 4u, 10u, 12u}) {
        FieldCtx f = mk_field(n);
        uint64_t zeros = 0;
        for (uint64_t a = 0; a <= f.elem_mask(); ++a)
            if (fq_trace(f, FqElem{a}) == 0) ++zeros;
        CHECK(zeros == (uint64_t{1} << (n - 1)));
    }

    FieldCtx f = mk_field(13);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        FqElem a{rng() & f.elem_mask()}, b{rng() & f.elem_mask()};
        CHECK(fq_trace(f, fq_add(a, b)) == (fq_trace(f, a) ^ fq_trace(f, b)));
        CHECK(fq_trace(f, fq_sq(f, a)) == fq_trace(f, a));
    }
}

TEST_CASE("Artin-Schreier solver") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    CHECK(solve_artin_schreier(f8, fq_one, fq_zero) == FqElem{0});
    CHECK(solve_artin_schreier(f8, fq_one, FqElem{0x06}) == FqElem{0x02});
    // trace-1 beta over F_8 has no solution for alpha = 1
    for (uint64_t b = 0; b < 8; ++b) {
        auto sol = solve_artin_schreier(f8, fq_one, FqElem{b});
        CHECK(sol.has_value() == (fq_trace(f8, FqElem{b}) == 0));
    }
    CHECK_THROWS_AS(solve_artin_schreier(f8, fq_zero, fq_one), Error);

    for (unsigned n : {2u, 4u, 7u, 9u, 16u, 33u}) {
        FieldCtx f = mk_field(n);
        std::mt19937_64 rng(n * 17);
        for (int i = 0; i < 200; ++i) {
            FqElem alpha{rng() & f.elem_mask()};
            if (alpha == fq_zero) continue;
            FqElem beta{rng() & f.elem_mask()};
            int obstruction = fq_trace(f, fq_mul(f, beta, fq_sq(f, fq_inv(f, alpha))));
            auto sol = solve_artin_schreier(f, alpha, beta);
            CHECK(sol.has_value() == (obstruction == 0));
            if (sol) {
                FqElem x = *sol;
                CHECK(fq_add(fq_sq(f, x), fq_mul(f, alpha, x)) == beta);
                FqElem other = fq_add(x, alpha);
                CHECK(x.bits <= other.bits);
            }
        }
    }
}

TEST_CASE("elements of prescribed order") {
    FieldCtx f8 = mk_field(3, uint64_t{0x0B});
    CHECK(element_of_order(f8, 1) == fq_one);
    CHECK(element_of_order(f8, 7) == FqElem{0x02});
    FieldCtx f4 = mk_field(2);
    CHECK(element_of_order(f4, 3) == FqElem{0x02});
    CHECK_THROWS_AS(element_of_order(f8, 5), Error);

    for (unsigned n : {4u, 6u, 10u, 12u}) {
        FieldCtx f = mk_field(n);
        for (uint64_t t : numt::divisors(f.group_order())) {
            FqElem g = element_of_order(f, t);
            CHECK(fq_pow(f, g, t) == fq_one);
            for (uint64_t s : numt::divisors(t))
                if (s != t) CHECK(fq_pow(f, g, s) != fq_one);
        }
    }
}

TEST_CASE("table invariant") {
    FieldCtx f = mk_field(10);
    REQUIRE(f.has_tables());
    // antilog[log[e]] = e for nonzero e, exercised through products
    for (uint64_t e = 1; e <= f.elem_mask(); ++e)
        CHECK(fq_mul(f, FqElem{e}, fq_one) == FqElem{e});
    CHECK_FALSE(mk_field(21).has_tables());
}

TEST_CASE("serialization and field specs") {
    FieldCtx f = parse_field_spec("3:b");
    CHECK(f.n() == 3);
    CHECK(f.modulus_full() == 0x0B);
    CHECK(parse_field_spec("8").modulus_hex() == "11b");
    CHECK(to_hex(FqElem{0x1a}) == "1a");
    CHECK(elem_from_hex(f, "5") == FqElem{5});
    CHECK_THROWS_AS(elem_from_hex(f, "9"), Error); // out of range for n = 3
    CHECK_THROWS_AS(parse_field_spec("nope"), Error);

    FieldCtx f64 = mk_field(64);
    CHECK(f64.modulus_hex().size() == 17);
    CHECK(f64.modulus_hex()[0] == '1');
    FieldCtx f64b = parse_field_spec("64:" + f64.modulus_hex());
    CHECK(f64b.modulus_tail() == f64.modulus_tail());
}

TEST_CASE("factorization utility") {
    using namespace duf::numt;
    CHECK(is_prime(2));
    CHECK(is_prime(2305843009213693951ull)); // 2^61 - 1
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime((uint64_t{1} << 62) - 1));
    auto f = factorize((uint64_t{1} << 62) - 1);
    uint64_t prod = 1;
    for (auto [p, e] : f)
        for (int i = 0; i < e; ++i) prod *= p;
    CHECK(prod == (uint64_t{1} << 62) - 1);
    for (auto [p, e] : f) CHECK(is_prime(p));
    CHECK(mul_order(2, 7) == 3);
    CHECK(mul_order(2, 67) == 66);
}
