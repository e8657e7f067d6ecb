#ifndef DUF_DIFFOP_HPP
#define DUF_DIFFOP_HPP

#include "duf/poly.hpp"

namespace duf {

/// Degree bound d of the decomposition polynomial: (m-1)/2 for odd m,
/// (m-2)/2 for even m >= 2, -1 when there is nothing to decompose.
int decomposition_degree(int m);

/// D_alpha f = f(x) + f(x + alpha). alpha = 0 raises ZeroDirection.
FqPoly d_alpha(const FqPoly& f, FqElem alpha);

/// g(x(x + alpha)) = g(x^2 + alpha x).
FqPoly compose_talpha(const FqPoly& g, FqElem alpha);

/// Inverse of compose_talpha on its image: peels D from the top against
/// powers of x^2 + alpha x. Inputs outside the image raise
/// NotTAlphaInvariant (an odd-degree leading term shows up while peeling).
FqPoly decompose_talpha(const FqPoly& D, FqElem alpha);

/// Decomposition of D_alpha f through x(x+alpha).
struct LAlphaResult {
    FqPoly g;                   ///< the unique g with g(x(x+alpha)) = D_alpha f
    std::vector<FqElem> b_top;  ///< coefficients of g from the top: b_top[i] = coeff of x^(d-i)
};

/// Peel D_alpha f against powers of x^2 + alpha x. The result is verified
/// against compose_talpha before returning.
LAlphaResult l_alpha(const FqPoly& f, FqElem alpha);

/// b1/b0 from the closed-form table indexed by m mod 8 (rows 3, 7, 0, 4).
/// Requires deg f >= 7 and deg f = 0 or 3 mod 4.
FqElem b_ratio(const FqPoly& f, FqElem alpha);

/// trace(b1 / (b0 alpha^2)) with b0, b1 taken from the actual decomposition.
int trace_criterion(const FqPoly& f, FqElem alpha);

} // namespace duf

#endif
