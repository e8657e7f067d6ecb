#include "duf/diffop.hpp"

namespace duf {

int decomposition_degree(int m) {
    if (m < 0) return -1;
    if (m % 2 == 1) return (m - 1) / 2;
    return (m - 2) / 2; // -1 for constants
}

FqPoly d_alpha(const FqPoly& f, FqElem alpha) {
    if (alpha == fq_zero) fail(errc::zero_direction, "derivative direction alpha = 0");
    return add(f, taylor_shift(f, alpha));
}

FqPoly compose_talpha(const FqPoly& g, FqElem alpha) {
    const auto& ctx = g.ctx();
    FqPoly t(ctx, {fq_zero, alpha, fq_one}); // x^2 + alpha x
    FqPoly acc(ctx);
    for (int i = g.degree(); i >= 0; --i)
        acc = add(mul(acc, t), FqPoly::constant(ctx, g.coeff(i)));
    return acc;
}

FqPoly decompose_talpha(const FqPoly& D, FqElem alpha) {
    const auto& ctx = D.ctx();
    FqPoly t(ctx, {fq_zero, alpha, fq_one});
    std::vector<FqPoly> tpow;
    tpow.push_back(FqPoly::constant(ctx, fq_one));
    int kmax = D.is_zero() ? -1 : D.degree() / 2;
    for (int k = 1; k <= kmax; ++k) tpow.push_back(mul(tpow.back(), t));

    std::vector<FqElem> gvec(static_cast<size_t>(kmax + 1), fq_zero);
    FqPoly rem = D;
    while (!rem.is_zero()) {
        int dd = rem.degree();
        if (dd % 2 != 0)
            fail(errc::not_t_alpha_invariant, "odd-degree leading term while peeling");
        int k = dd / 2;
        FqElem b = rem.leading();
        gvec[static_cast<size_t>(k)] = b;
        rem = add(rem, mul_scalar(tpow[static_cast<size_t>(k)], b));
    }
    return FqPoly(ctx, std::move(gvec));
}

LAlphaResult l_alpha(const FqPoly& f, FqElem alpha) {
    if (alpha == fq_zero) fail(errc::zero_direction, "alpha = 0");
    const FqPoly D = d_alpha(f, alpha);
    const int d = decomposition_degree(f.degree());

    LAlphaResult out{decompose_talpha(D, alpha), {}};
    if (!(compose_talpha(out.g, alpha) == D))
        fail(errc::not_t_alpha_invariant, "decomposition failed verification");
    out.b_top.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) out.b_top.push_back(out.g.coeff(d - i));
    return out;
}

FqElem b_ratio(const FqPoly& f, FqElem alpha) {
    const int m = f.degree();
    if (m < 7 || (m % 4 != 0 && m % 4 != 3))
        fail(errc::unsupported_degree, "b_ratio needs deg f >= 7 with m = 0 or 3 mod 4");
    const auto& ctx = f.ctx();
    auto a = [&](int i) { return f.coeff(m - i); }; // paper indexing, a(0) = leading
    FqElem a2 = fq_sq(ctx, alpha);
    switch (m % 8) {
        case 3: {
            FqElem num = fq_add(fq_mul(ctx, a(1), alpha), a(2));
            return fq_add(a2, fq_mul(ctx, num, fq_inv(ctx, a(0))));
        }
        case 7: {
            FqElem num = fq_add(fq_mul(ctx, a(1), alpha), a(2));
            return fq_mul(ctx, num, fq_inv(ctx, a(0)));
        }
        case 0: {
            if (a(1) == fq_zero) fail(errc::degenerate_leading, "table denominator a1 = 0");
            FqElem num = fq_add(fq_mul(ctx, a(2), alpha), a(3));
            return fq_mul(ctx, num, fq_inv(ctx, a(1)));
        }
        case 4: {
            if (a(1) == fq_zero) fail(errc::degenerate_leading, "table denominator a1 = 0");
            FqElem num = fq_add(fq_mul(ctx, a(0), fq_mul(ctx, a2, alpha)),
                                fq_add(fq_mul(ctx, a(2), alpha), a(3)));
            return fq_add(a2, fq_mul(ctx, num, fq_inv(ctx, a(1))));
        }
        default: break;
    }
    fail(errc::unsupported_degree, "unreachable congruence row");
}

int trace_criterion(const FqPoly& f, FqElem alpha) {
    const int m = f.degree();
    if (m < 7 || (m % 4 != 0 && m % 4 != 3))
        fail(errc::unsupported_degree, "trace criterion needs deg f >= 7 with m = 0 or 3 mod 4");
    const auto& ctx = f.ctx();
    auto lr = l_alpha(f, alpha);
    FqElem b0 = lr.b_top[0], b1 = lr.b_top[1];
    if (b0 == fq_zero) fail(errc::degenerate_leading, "b0 = 0");
    FqElem v = fq_mul(ctx, b1, fq_inv(ctx, b0));
    v = fq_mul(ctx, v, fq_sq(ctx, fq_inv(ctx, alpha)));
    return fq_trace(ctx, v);
}

} // namespace duf
