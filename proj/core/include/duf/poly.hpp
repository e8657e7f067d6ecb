#ifndef DUF_POLY_HPP
#define DUF_POLY_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duf/field.hpp"

namespace duf {

/// Dense polynomial over F_{2^n}; coefficients ascending by power, leading
/// coefficient nonzero unless the polynomial is zero (empty sequence).
/// Values are immutable once built; all operations return new polynomials.
class FqPoly {
  public:
    explicit FqPoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
    FqPoly(FieldCtx ctx, std::vector<FqElem> ascending)
        : ctx_(std::move(ctx)), c_(std::move(ascending)) {
        trim();
    }

    const FieldCtx& ctx() const noexcept { return ctx_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    FqElem coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : fq_zero;
    }
    FqElem leading() const { return c_.empty() ? fq_zero : c_.back(); }
    std::span<const FqElem> coeffs() const noexcept { return c_; }

    static FqPoly monomial(const FieldCtx& ctx, int k, FqElem c = fq_one);
    static FqPoly constant(const FieldCtx& ctx, FqElem c);
    /// Comma-separated hex coefficients, highest degree first.
    static FqPoly from_string(const FieldCtx& ctx, std::string_view s);
    std::string to_string() const;

    friend bool operator==(const FqPoly& a, const FqPoly& b) {
        return a.ctx_.same_field(b.ctx_) && a.c_ == b.c_;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == fq_zero) c_.pop_back();
    }
    FieldCtx ctx_;
    std::vector<FqElem> c_;
};

FqPoly add(const FqPoly& a, const FqPoly& b);
FqPoly mul(const FqPoly& a, const FqPoly& b);
FqPoly mul_scalar(const FqPoly& a, FqElem c);
/// Quotient and remainder; divisor must be nonzero.
std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b);
FqPoly monic(const FqPoly& a);
/// Monic gcd (zero when both inputs are zero).
FqPoly gcd_monic(FqPoly a, FqPoly b);
FqElem eval(const FqPoly& f, FqElem x);

/// f(x + alpha); binomials mod 2 via Lucas (subset bit patterns).
FqPoly taylor_shift(const FqPoly& f, FqElem alpha);
/// Formal derivative in characteristic 2: only odd-power terms survive.
FqPoly derivative(const FqPoly& f);
/// Second Hasse-Schmidt derivative: coefficient of u^2 in f(x+u).
FqPoly hasse2(const FqPoly& f);
/// Resultant via the Euclidean remainder sequence (exact over the field).
FqElem resultant(const FqPoly& f, const FqPoly& g);
/// Monic product of the distinct irreducible factors of f (f nonzero).
FqPoly radical(const FqPoly& f);
/// All roots in the base field, sorted by encoding. Brute-force scan; refuses
/// n > 24.
std::vector<FqElem> roots_in_field(const FqPoly& f);
/// Exact square root of a polynomial whose exponents are all even.
FqPoly poly_sqrt(const FqPoly& f);

} // namespace duf

#endif
