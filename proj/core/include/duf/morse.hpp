#ifndef DUF_MORSE_HPP
#define DUF_MORSE_HPP

#include <optional>

#include "duf/diffop.hpp"
#include "duf/poly.hpp"

namespace duf {

/// Verdicts for the three Morse conditions in characteristic 2:
/// (a) non-degenerate critical points, (b) distinct critical values,
/// (c) degree prime to 2.
struct MorseReport {
    bool cond_a = false;
    bool cond_b = false;
    bool cond_c = false;
    /// (a) failure: the nonconstant gcd(g', g^[2]); its irreducible factors
    /// cut out the degenerate critical points.
    std::optional<FqPoly> degenerate_factor;
    /// (b) failure: the repeated factor of the critical-value polynomial.
    std::optional<FqPoly> repeated_value_factor;

    bool passed() const { return cond_a && cond_b && cond_c; }
};

/// V(y) = Res_x(h_rad(x), y + g(x)) where h_rad is the radical of the square
/// root of g'. Its roots are the critical values of g, one per distinct
/// critical point. Requires g' != 0.
FqPoly critical_value_poly(const FqPoly& g);

/// Check Morse conditions for a nonconstant g.
MorseReport is_morse(const FqPoly& g);

struct MorseScan {
    struct Bad {
        FqElem alpha;
        MorseReport report;
    };
    uint64_t non_morse_count = 0;
    std::vector<Bad> bad;       // ascending by alpha encoding
    uint64_t fail_a = 0, fail_b = 0, fail_c = 0;
};

/// All alpha in F_q^* with L_alpha f not Morse. deg f must be >= 7 and
/// congruent to 3 mod 4.
MorseScan count_non_morse_alphas(const FqPoly& f, unsigned threads = 0);

} // namespace duf

#endif
