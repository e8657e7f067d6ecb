#include "duf/poly.hpp"

#include <algorithm>
#include <sstream>

namespace duf {

namespace {

void require_same_field(const FqPoly& a, const FqPoly& b) {
    if (!a.ctx().same_field(b.ctx()))
        fail(errc::invalid_argument, "operands live in different fields");
}

} // namespace

FqPoly FqPoly::monomial(const FieldCtx& ctx, int k, FqElem c) {
    std::vector<FqElem> v(static_cast<size_t>(k) + 1, fq_zero);
    v[static_cast<size_t>(k)] = c;
    return FqPoly(ctx, std::move(v));
}

FqPoly FqPoly::constant(const FieldCtx& ctx, FqElem c) { return FqPoly(ctx, {c}); }

FqPoly FqPoly::from_string(const FieldCtx& ctx, std::string_view s) {
    std::vector<FqElem> top_down;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string_view tok = s.substr(start, comma == std::string_view::npos ? s.size() - start
                                                                               : comma - start);
        top_down.push_back(elem_from_hex(ctx, tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    std::reverse(top_down.begin(), top_down.end());
    return FqPoly(ctx, std::move(top_down));
}

std::string FqPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int i = degree(); i >= 0; --i) {
        os << to_hex(coeff(i));
        if (i > 0) os << ',';
    }
    return os.str();
}

FqPoly add(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    std::vector<FqElem> c(std::max(a.coeffs().size(), b.coeffs().size()), fq_zero);
    for (size_t i = 0; i < c.size(); ++i) c[i] = fq_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return FqPoly(a.ctx(), std::move(c));
}

FqPoly mul(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return FqPoly(a.ctx());
    std::vector<FqElem> c(a.coeffs().size() + b.coeffs().size() - 1, fq_zero);
    const auto& ctx = a.ctx();
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        FqElem ai = a.coeffs()[i];
        if (ai == fq_zero) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = fq_add(c[i + j], fq_mul(ctx, ai, b.coeffs()[j]));
    }
    return FqPoly(ctx, std::move(c));
}

FqPoly mul_scalar(const FqPoly& a, FqElem s) {
    std::vector<FqElem> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x = fq_mul(a.ctx(), x, s);
    return FqPoly(a.ctx(), std::move(c));
}

std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    const auto& ctx = a.ctx();
    if (a.degree() < b.degree()) return {FqPoly(ctx), a};
    std::vector<FqElem> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<FqElem> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, fq_zero);
    FqElem lead_inv = fq_inv(ctx, b.leading());
    for (int i = a.degree(); i >= b.degree(); --i) {
        FqElem c = rem[static_cast<size_t>(i)];
        if (c == fq_zero) continue;
        FqElem q = fq_mul(ctx, c, lead_inv);
        quot[static_cast<size_t>(i - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            size_t at = static_cast<size_t>(i - b.degree() + j);
            rem[at] = fq_add(rem[at], fq_mul(ctx, q, b.coeff(j)));
        }
    }
    return {FqPoly(ctx, std::move(quot)), FqPoly(ctx, std::move(rem))};
}

FqPoly monic(const FqPoly& a) {
    if (a.is_zero() || a.leading() == fq_one) return a;
    return mul_scalar(a, fq_inv(a.ctx(), a.leading()));
}

FqPoly gcd_monic(FqPoly a, FqPoly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        FqPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

FqElem eval(const FqPoly& f, FqElem x) {
    FqElem acc = fq_zero;
    const auto& ctx = f.ctx();
    for (int i = f.degree(); i >= 0; --i) acc = fq_add(fq_mul(ctx, acc, x), f.coeff(i));
    return acc;
}

FqPoly taylor_shift(const FqPoly& f, FqElem alpha) {
    if (alpha == fq_zero || f.is_zero()) return f;
    const auto& ctx = f.ctx();
    int d = f.degree();
    std::vector<FqElem> apow(static_cast<size_t>(d) + 1);
    apow[0] = fq_one;
    for (int i = 1; i <= d; ++i) apow[static_cast<size_t>(i)] = fq_mul(ctx, apow[static_cast<size_t>(i - 1)], alpha);
    std::vector<FqElem> out(static_cast<size_t>(d) + 1, fq_zero);
    for (int k = 0; k <= d; ++k) {
        FqElem ck = f.coeff(k);
        if (ck == fq_zero) continue;
        // C(k,j) odd iff the bits of j are contained in those of k
        unsigned j = static_cast<unsigned>(k);
        while (true) {
            out[j] = fq_add(out[j], fq_mul(ctx, ck, apow[static_cast<size_t>(k) - j]));
            if (j == 0) break;
            j = (j - 1) & static_cast<unsigned>(k);
        }
    }
    return FqPoly(ctx, std::move(out));
}

FqPoly derivative(const FqPoly& f) {
    if (f.degree() < 1) return FqPoly(f.ctx());
    std::vector<FqElem> out(static_cast<size_t>(f.degree()), fq_zero);
    for (int k = 1; k <= f.degree(); k += 2) out[static_cast<size_t>(k - 1)] = f.coeff(k);
    return FqPoly(f.ctx(), std::move(out));
}

FqPoly hasse2(const FqPoly& f) {
    if (f.degree() < 2) return FqPoly(f.ctx());
    std::vector<FqElem> out(static_cast<size_t>(f.degree()) - 1, fq_zero);
    for (int k = 2; k <= f.degree(); ++k)
        if (k & 2) out[static_cast<size_t>(k - 2)] = f.coeff(k); // C(k,2) odd iff k mod 4 in {2,3}
    return FqPoly(f.ctx(), std::move(out));
}

FqElem resultant(const FqPoly& f, const FqPoly& g) {
    require_same_field(f, g);
    if (f.is_zero() && g.is_zero()) fail(errc::undefined_resultant, "Res(0,0)");
    const auto& ctx = f.ctx();
    if (f.is_zero()) return g.degree() == 0 ? fq_one : fq_zero;
    if (g.is_zero()) return f.degree() == 0 ? fq_one : fq_zero;
    FqPoly a = f, b = g;
    if (a.degree() < b.degree()) std::swap(a, b); // char 2: no sign to track
    if (b.degree() == 0) return fq_pow(ctx, b.leading(), static_cast<uint64_t>(a.degree()));
    FqElem res = fq_one;
    while (true) {
        FqPoly r = divrem(a, b).second;
        if (r.is_zero()) return fq_zero; // b divides a, deg b >= 1
        res = fq_mul(ctx, res, fq_pow(ctx, b.leading(), static_cast<uint64_t>(a.degree() - r.degree())));
        a = std::move(b);
        b = std::move(r);
        if (b.degree() == 0) {
            res = fq_mul(ctx, res, fq_pow(ctx, b.leading(), static_cast<uint64_t>(a.degree())));
            return res;
        }
    }
}

FqPoly poly_sqrt(const FqPoly& f) {
    if (f.is_zero()) return f;
    const auto& ctx = f.ctx();
    std::vector<FqElem> out(static_cast<size_t>(f.degree() / 2) + 1, fq_zero);
    uint64_t e = ctx.n() == 1 ? 1 : (uint64_t{1} << (ctx.n() - 1)); // c -> c^(2^(n-1))
    for (int k = 0; k <= f.degree(); ++k) {
        if (f.coeff(k) == fq_zero) continue;
        if (k & 1) fail(errc::invalid_argument, "polynomial is not a square");
        out[static_cast<size_t>(k / 2)] = fq_pow(ctx, f.coeff(k), e);
    }
    return FqPoly(ctx, std::move(out));
}

FqPoly radical(const FqPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "radical of zero");
    if (f.degree() == 0) return FqPoly::constant(f.ctx(), fq_one);
    FqPoly g = monic(f);
    FqPoly gp = derivative(g);
    if (gp.is_zero()) return radical(poly_sqrt(g)); // g is a square in characteristic 2
    FqPoly w = gcd_monic(g, gp);
    FqPoly part = divrem(g, w).first; // product of factors with odd multiplicity
    if (w.degree() == 0) return part;
    FqPoly rw = radical(w);
    return mul(part, divrem(rw, gcd_monic(part, rw)).first);
}

std::vector<FqElem> roots_in_field(const FqPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "roots of zero polynomial");
    if (f.ctx().n() > 24) fail(errc::scale_error, "brute-force root scan capped at n <= 24");
    std::vector<FqElem> roots;
    uint64_t q1 = f.ctx().elem_mask();
    for (uint64_t x = 0;; ++x) {
        if (eval(f, FqElem{x}) == fq_zero) roots.push_back(FqElem{x});
        if (x == q1) break;
    }
    return roots;
}

} // namespace duf
