#ifndef DUF_FIELD_HPP
#define DUF_FIELD_HPP

#include <cstdint>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "duf/error.hpp"

namespace duf {

/// Element of F_{2^n} in the polynomial basis: bit i = coordinate of x^i.
struct FqElem {
    uint64_t bits = 0;
    friend constexpr auto operator<=>(const FqElem&, const FqElem&) = default;
};

inline constexpr FqElem fq_zero{0};
inline constexpr FqElem fq_one{1};

/// Addition in characteristic 2 is coordinate-wise XOR.
inline constexpr FqElem fq_add(FqElem a, FqElem b) { return FqElem{a.bits ^ b.bits}; }

/// Immutable description of a concrete F_{2^n}, n <= 64.
///
/// The modulus is a degree-n binary irreducible; its full encoding is the
/// (n+1)-bit integer with bit i = coefficient of x^i. Cheap to copy: the
/// log/antilog tables (present iff n <= 20) are shared.
class FieldCtx {
  public:
    unsigned n() const noexcept { return n_; }
    /// Modulus with the leading x^n term stripped (what reduction XORs in).
    uint64_t modulus_tail() const noexcept { return tail_; }
    /// Full (n+1)-bit modulus encoding; only valid for n < 64.
    uint64_t modulus_full() const noexcept { return tail_ | (uint64_t{1} << n_); }
    std::string modulus_hex() const;
    uint64_t elem_mask() const noexcept { return mask_; }
    /// q - 1, the order of the multiplicative group.
    uint64_t group_order() const noexcept { return order_; }
    bool has_tables() const noexcept { return tables_ != nullptr; }
    /// Smallest-encoding primitive element.
    FqElem generator() const noexcept { return gen_; }

    bool same_field(const FieldCtx& o) const noexcept { return n_ == o.n_ && tail_ == o.tail_; }

    friend FieldCtx mk_field(unsigned n, std::optional<uint64_t> modulus);
    friend FqElem fq_mul(const FieldCtx& ctx, FqElem a, FqElem b);

  private:
    FieldCtx() = default;

    struct Tables {
        std::vector<uint32_t> log;     // index: element encoding, defined for nonzero
        std::vector<uint64_t> antilog; // length 2(q-1), antilog[i] = g^i
    };

    unsigned n_ = 0;
    uint64_t tail_ = 0;
    uint64_t mask_ = 0;
    uint64_t order_ = 0;
    FqElem gen_{};
    std::shared_ptr<const Tables> tables_;
};

/// Build F_{2^n}. Without an explicit modulus, picks the irreducible
/// degree-n binary polynomial of smallest integer encoding.
/// For n < 64 `modulus` is the full (n+1)-bit encoding; for n = 64 it is the
/// 64 low bits with the x^64 term implicit.
FieldCtx mk_field(unsigned n, std::optional<uint64_t> modulus = std::nullopt);

FqElem fq_mul(const FieldCtx& ctx, FqElem a, FqElem b);
FqElem fq_sq(const FieldCtx& ctx, FqElem a);
FqElem fq_pow(const FieldCtx& ctx, FqElem a, uint64_t e);
/// Inverse via a^(2^n - 2); a = 0 raises DivisionByZero.
FqElem fq_inv(const FieldCtx& ctx, FqElem a);
/// Absolute trace to F_2.
int fq_trace(const FieldCtx& ctx, FqElem a);

/// Least solution x of x^2 + alpha*x = beta, or nullopt when the Artin-Schreier
/// obstruction trace(beta/alpha^2) is nonzero. The two solutions differ by
/// alpha; the one with smaller encoding is returned.
std::optional<FqElem> solve_artin_schreier(const FieldCtx& ctx, FqElem alpha, FqElem beta);

/// Deterministic element of exact multiplicative order t: g^((q-1)/t) for the
/// smallest-encoding primitive g. t must divide q - 1.
FqElem element_of_order(const FieldCtx& ctx, uint64_t t);

std::string to_hex(FqElem a);
FqElem elem_from_hex(const FieldCtx& ctx, std::string_view hex);

/// "n" or "n:modulushex" (modulus hex is the full encoding).
FieldCtx parse_field_spec(std::string_view spec);

/// Irreducibility over F_2 of x^n + tail (Rabin's test).
bool gf2_poly_irreducible(unsigned n, uint64_t tail);
/// Tail of the smallest-encoding irreducible of degree n.
uint64_t smallest_irreducible_tail(unsigned n);

} // namespace duf

#endif
