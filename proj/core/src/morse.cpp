#include "duf/morse.hpp"

#include <vector>

#include "duf/parallel.hpp"

namespace duf {

namespace {

// Characteristic polynomial det(yI + M) over F_q via Hessenberg reduction.
// Similarity transforms keep the spectrum; char 2 spares the signs.
FqPoly charpoly(const FieldCtx& ctx, std::vector<std::vector<FqElem>> H) {
    const int n = static_cast<int>(H.size());
    for (int col = 0; col + 2 < n; ++col) {
        int piv = -1;
        for (int i = col + 1; i < n; ++i)
            if (H[static_cast<size_t>(i)][static_cast<size_t>(col)] != fq_zero) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != col + 1) {
            std::swap(H[static_cast<size_t>(piv)], H[static_cast<size_t>(col + 1)]);
            for (int i = 0; i < n; ++i)
                std::swap(H[static_cast<size_t>(i)][static_cast<size_t>(piv)],
                          H[static_cast<size_t>(i)][static_cast<size_t>(col + 1)]);
        }
        FqElem pinv = fq_inv(ctx, H[static_cast<size_t>(col + 1)][static_cast<size_t>(col)]);
        for (int i = col + 2; i < n; ++i) {
            FqElem hic = H[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (hic == fq_zero) continue;
            FqElem u = fq_mul(ctx, hic, pinv);
            for (int j = 0; j < n; ++j)
                H[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    fq_add(H[static_cast<size_t>(i)][static_cast<size_t>(j)],
                           fq_mul(ctx, u, H[static_cast<size_t>(col + 1)][static_cast<size_t>(j)]));
            for (int i2 = 0; i2 < n; ++i2)
                H[static_cast<size_t>(i2)][static_cast<size_t>(col + 1)] =
                    fq_add(H[static_cast<size_t>(i2)][static_cast<size_t>(col + 1)],
                           fq_mul(ctx, u, H[static_cast<size_t>(i2)][static_cast<size_t>(i)]));
        }
    }
    // p_m = (y + H[m-1][m-1]) p_{m-1} + sum_i H[i-1][m-1] (prod subdiag) p_{i-1}
    std::vector<FqPoly> p;
    p.push_back(FqPoly::constant(ctx, fq_one));
    for (int m = 1; m <= n; ++m) {
        FqPoly pm = mul(p[static_cast<size_t>(m - 1)],
                        FqPoly(ctx, {H[static_cast<size_t>(m - 1)][static_cast<size_t>(m - 1)], fq_one}));
        FqElem prod = fq_one;
        for (int i = m - 1; i >= 1; --i) {
            prod = fq_mul(ctx, prod, H[static_cast<size_t>(i)][static_cast<size_t>(i - 1)]);
            FqElem term = fq_mul(ctx, H[static_cast<size_t>(i - 1)][static_cast<size_t>(m - 1)], prod);
            if (term != fq_zero) pm = add(pm, mul_scalar(p[static_cast<size_t>(i - 1)], term));
        }
        p.push_back(std::move(pm));
    }
    return p[static_cast<size_t>(n)];
}

} // namespace

FqPoly critical_value_poly(const FqPoly& g) {
    const auto& ctx = g.ctx();
    FqPoly gp = derivative(g);
    if (gp.is_zero()) fail(errc::invalid_argument, "critical_value_poly needs g' != 0");
    FqPoly hr = radical(poly_sqrt(gp)); // distinct critical points, monic
    int r = hr.degree();
    if (r <= 0) return FqPoly::constant(ctx, fq_one);
    FqPoly gbar = divrem(g, hr).second;
    // multiplication-by-g matrix on F_q[x]/(h_rad)
    std::vector<std::vector<FqElem>> M(static_cast<size_t>(r), std::vector<FqElem>(static_cast<size_t>(r), fq_zero));
    FqPoly pow = gbar;
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < r; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = pow.coeff(i);
        if (j + 1 < r) {
            // next column: x^(j+1) * gbar mod hr
            std::vector<FqElem> shifted(static_cast<size_t>(pow.degree()) + 2, fq_zero);
            for (int i = 0; i <= pow.degree(); ++i) shifted[static_cast<size_t>(i + 1)] = pow.coeff(i);
            pow = divrem(FqPoly(ctx, std::move(shifted)), hr).second;
        }
    }
    return charpoly(ctx, std::move(M));
}

MorseReport is_morse(const FqPoly& g) {
    if (g.degree() < 1) fail(errc::not_a_polynomial_map, "g must be nonconstant");
    const auto& ctx = g.ctx();
    MorseReport rep;
    rep.cond_c = (g.degree() % 2 == 1);

    FqPoly gp = derivative(g);
    FqPoly g2 = hasse2(g);
    if (gp.is_zero() && g2.is_zero()) {
        rep.cond_a = false;
    } else {
        FqPoly w = gcd_monic(gp, g2);
        rep.cond_a = (w.degree() == 0);
        if (!rep.cond_a) rep.degenerate_factor = std::move(w);
    }

    if (gp.is_zero()) {
        // g lies in F_q[x^2]: every value is hit with multiplicity, condition
        // (b) cannot hold.
        rep.cond_b = false;
        return rep;
    }
    FqPoly hr = radical(poly_sqrt(gp));
    if (hr.degree() <= 1) {
        rep.cond_b = true; // at most one critical point
        return rep;
    }
    FqPoly v = critical_value_poly(g);
    FqPoly vp = derivative(v);
    if (vp.is_zero()) {
        rep.cond_b = false;
        rep.repeated_value_factor = radical(poly_sqrt(v));
        return rep;
    }
    FqPoly w2 = gcd_monic(v, vp);
    rep.cond_b = (w2.degree() == 0);
    if (!rep.cond_b) rep.repeated_value_factor = std::move(w2);
    return rep;
}

MorseScan count_non_morse_alphas(const FqPoly& f, unsigned threads) {
    const int m = f.degree();
    if (m < 7 || m % 4 != 3)
        fail(errc::unsupported_degree, "scan needs deg f >= 7 with m = 3 mod 4");
    const uint64_t q1 = f.ctx().group_order();

    unsigned t = effective_threads(threads, q1);
    std::vector<std::vector<MorseScan::Bad>> locals(t);
    parallel_chunks(1, q1 + 1, t, [&](unsigned w, uint64_t lo, uint64_t hi) {
        auto& local = locals[w];
        for (uint64_t a = lo; a < hi; ++a) {
            MorseReport rep = is_morse(l_alpha(f, FqElem{a}).g);
            if (!rep.passed()) local.push_back({FqElem{a}, std::move(rep)});
        }
    });

    MorseScan out;
    for (auto& local : locals)
        for (auto& b : local) {
            if (!b.report.cond_a) ++out.fail_a;
            if (!b.report.cond_b) ++out.fail_b;
            if (!b.report.cond_c) ++out.fail_c;
            out.bad.push_back(std::move(b));
        }
    out.non_morse_count = out.bad.size();
    return out;
}

} // namespace duf
