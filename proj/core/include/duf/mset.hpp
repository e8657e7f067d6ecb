#ifndef DUF_MSET_HPP
#define DUF_MSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "duf/field.hpp"

namespace duf {

/// Roots-of-unity scans beyond this splitting-field degree are refused.
inline constexpr unsigned max_scan_degree = 256;

/// A violating pair for the roots-of-unity criterion: zeta1 = gamma^i,
/// zeta2 = gamma^j for a fixed element gamma of exact order t.
struct MWitness {
    uint64_t t = 0;
    uint64_t i = 0, j = 0;
    std::string zeta1_hex, zeta2_hex;
    /// Present iff the splitting field fits in 64 bits; wider scans run in the
    /// cyclotomic quotient ring and report residue encodings instead.
    std::optional<FieldCtx> field;
};

struct MVerdict {
    uint64_t m = 0;
    bool member = false;
    uint64_t t = 0;   ///< odd part of m-1
    unsigned n0 = 0;  ///< degree of the field generated by the t-th roots of unity
    std::optional<MWitness> witness;
};

/// Roots-of-unity criterion for arbitrary m >= 3 (m need not be odd):
/// member iff no pair of (m-1)-th roots of unity zeta1, zeta2 != 1 with
/// zeta1 not in {zeta2, zeta2^-1} has (1+zeta1)/(1+zeta2) again a root of
/// unity. First witness in lexicographic (i, j) order is reported.
MVerdict condition_xm(uint64_t m, unsigned threads = 0);

namespace detail {
/// Cyclotomic-quotient route (multiword arithmetic in F_2[z]/Phi_t) usable at
/// any feasible degree; condition_xm dispatches here when the splitting field
/// exceeds 64 bits. Exposed to cross-check the two routes where they overlap.
MVerdict condition_xm_wide(uint64_t m, unsigned threads = 0);
} // namespace detail

/// Membership of odd m >= 3 in the exponent set (condition_xm plus oddness).
MVerdict in_m(uint64_t m, unsigned threads = 0);

/// Verdicts for all odd 3 <= m < limit, ascending.
std::vector<MVerdict> scan_m(uint64_t limit, unsigned threads = 0);

struct LPrimeVerdict {
    uint64_t l = 0;
    bool wieferich_ok = false; ///< 2^(l-1) mod l^2 != 1
    bool roots_ok = false;     ///< condition_xm(l+1) member
    bool ok = false;
    unsigned n0 = 0;
};

/// Eligibility of an odd prime l for the prime-power lifting argument.
LPrimeVerdict l_prime_verdict(uint64_t l);
bool l_prime_ok(uint64_t l);

/// All odd primes < limit with their verdicts.
std::vector<LPrimeVerdict> scan_l_primes(uint64_t limit);

enum class FamilyKind { pow2, two_pows, l_power, first_family, second_family };

struct FamilyParams {
    uint64_t l = 0;
    unsigned kmax = 4;
    unsigned smax = 2;
};

struct FamilyEntry {
    uint64_t m = 0;
    int mod8 = 0; ///< computed, never assumed
    std::string provenance;
    bool congruence_ok = true; ///< computed m mod 8 matches the family's claim
};

std::vector<FamilyEntry> gen_families(FamilyKind kind, const FamilyParams& params);

} // namespace duf

#endif
