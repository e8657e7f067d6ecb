#include "duf/mset.hpp"

#include <atomic>

#include "duf/gf2x.hpp"
#include "duf/numt.hpp"
#include "duf/parallel.hpp"

namespace duf {

namespace {

struct PairHit {
    uint64_t i, j;
};

// Smallest lexicographic (i, j) with hit(i, j), scanning i in parallel.
// Workers cover contiguous i-ranges; the earliest worker owning a hit wins,
// which is the lexicographic minimum.
template <class HitFn>
std::optional<PairHit> first_bad_pair(uint64_t t, unsigned threads, HitFn&& hit) {
    unsigned tn = effective_threads(threads, t);
    std::vector<std::optional<PairHit>> found(tn);
    std::atomic<uint64_t> cutoff{t}; // no i beyond a known hit needs scanning
    parallel_chunks(1, t, tn, [&](unsigned w, uint64_t lo, uint64_t hi) {
        for (uint64_t i = lo; i < hi; ++i) {
            if (i >= cutoff.load(std::memory_order_relaxed)) return;
            for (uint64_t j = 1; j < t; ++j) {
                if (j == i || i + j == t) continue;
                if (hit(i, j)) {
                    found[w] = PairHit{i, j};
                    uint64_t cur = cutoff.load(std::memory_order_relaxed);
                    while (i < cur && !cutoff.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        }
    });
    for (auto& f : found)
        if (f) return f;
    return std::nullopt;
}

MVerdict verdict_narrow(uint64_t m, uint64_t t, unsigned n0, unsigned threads) {
    FieldCtx ctx = mk_field(n0);
    FqElem gamma = element_of_order(ctx, t);
    std::vector<FqElem> zeta(t);
    zeta[0] = fq_one;
    for (uint64_t i = 1; i < t; ++i) zeta[i] = fq_mul(ctx, zeta[i - 1], gamma);
    // (1+zeta1)/(1+zeta2) is a t-th root of unity iff (1+zeta1)^t = (1+zeta2)^t
    std::vector<FqElem> pw(t);
    for (uint64_t i = 1; i < t; ++i) pw[i] = fq_pow(ctx, fq_add(fq_one, zeta[i]), t);

    MVerdict v{m, true, t, n0, std::nullopt};
    auto hit = first_bad_pair(t, threads, [&](uint64_t i, uint64_t j) { return pw[i] == pw[j]; });
    if (hit) {
        v.member = false;
        v.witness = MWitness{t, hit->i, hit->j, to_hex(zeta[hit->i]), to_hex(zeta[hit->j]), ctx};
    }
    return v;
}

MVerdict verdict_wide(uint64_t m, uint64_t t, unsigned n0, unsigned threads) {
    // Work in F_2[z]/Phi_t(z), a product of copies of F_{2^n0} in which the
    // class of z has exact order t. A pair is bad iff (1+z^i)^t + (1+z^j)^t
    // vanishes in some component, i.e. shares a factor with Phi_t.
    gf2x::Poly phi = gf2x::cyclotomic(t);
    std::vector<gf2x::Poly> zi(t), pw(t);
    zi[0] = gf2x::mod(gf2x::one(), phi);
    gf2x::Poly z = gf2x::x_pow(1);
    for (uint64_t i = 1; i < t; ++i) zi[i] = gf2x::mulmod(zi[i - 1], z, phi);
    for (uint64_t i = 1; i < t; ++i) {
        gf2x::Poly base = gf2x::add(gf2x::one(), zi[i]);
        pw[i] = gf2x::powmod(base, t, phi);
    }
    MVerdict v{m, true, t, n0, std::nullopt};
    auto hit = first_bad_pair(t, threads, [&](uint64_t i, uint64_t j) {
        gf2x::Poly s = gf2x::add(pw[i], pw[j]);
        if (gf2x::is_zero(s)) return true;
        return !gf2x::is_one(gf2x::gcd(s, phi));
    });
    if (hit) {
        v.member = false;
        v.witness = MWitness{t,
                             hit->i,
                             hit->j,
                             gf2x::to_hex(zi[hit->i]),
                             gf2x::to_hex(zi[hit->j]),
                             std::nullopt};
    }
    return v;
}

} // namespace

namespace {

uint64_t odd_part_of_m_minus_1(uint64_t m) {
    uint64_t t = m - 1;
    while (t % 2 == 0) t /= 2;
    return t;
}

} // namespace

MVerdict condition_xm(uint64_t m, unsigned threads) {
    if (m < 3) fail(errc::invalid_argument, "m must be >= 3");
    uint64_t t = odd_part_of_m_minus_1(m);
    if (t == 1) return MVerdict{m, true, 1, 1, std::nullopt};

    uint64_t n0 = numt::mul_order(2, t);
    if (n0 > max_scan_degree)
        fail(errc::field_too_large, "roots of unity need degree " + std::to_string(n0) +
                                        " > " + std::to_string(max_scan_degree));
    if (n0 <= 64) return verdict_narrow(m, t, static_cast<unsigned>(n0), threads);
    return verdict_wide(m, t, static_cast<unsigned>(n0), threads);
}

MVerdict detail::condition_xm_wide(uint64_t m, unsigned threads) {
    if (m < 3) fail(errc::invalid_argument, "m must be >= 3");
    uint64_t t = odd_part_of_m_minus_1(m);
    if (t == 1) return MVerdict{m, true, 1, 1, std::nullopt};
    uint64_t n0 = numt::mul_order(2, t);
    if (n0 > max_scan_degree)
        fail(errc::field_too_large, "roots of unity need degree " + std::to_string(n0) +
                                        " > " + std::to_string(max_scan_degree));
    return verdict_wide(m, t, static_cast<unsigned>(n0), threads);
}

MVerdict in_m(uint64_t m, unsigned threads) {
    if (m % 2 == 0) fail(errc::not_odd, "membership is defined for odd m");
    if (m < 3) fail(errc::invalid_argument, "m must be >= 3");
    return condition_xm(m, threads);
}

std::vector<MVerdict> scan_m(uint64_t limit, unsigned threads) {
    if (limit < 3) fail(errc::invalid_argument, "limit must be >= 3");
    std::vector<MVerdict> out;
    for (uint64_t m = 3; m < limit; m += 2) out.push_back(in_m(m, threads));
    return out;
}

LPrimeVerdict l_prime_verdict(uint64_t l) {
    if (l < 3 || l % 2 == 0 || !numt::is_prime(l))
        fail(errc::not_odd_prime, "l must be an odd prime");
    if (l >= (uint64_t{1} << 32)) fail(errc::scale_error, "l^2 must fit in 64 bits");
    LPrimeVerdict v;
    v.l = l;
    v.wieferich_ok = numt::powmod(2, l - 1, l * l) != 1;
    if (v.wieferich_ok) {
        // short-circuit: the roots scan can need a huge splitting field, and
        // a Wieferich failure already settles the verdict
        MVerdict cond = condition_xm(l + 1);
        v.roots_ok = cond.member;
        v.n0 = cond.n0;
    }
    v.ok = v.wieferich_ok && v.roots_ok;
    return v;
}

bool l_prime_ok(uint64_t l) { return l_prime_verdict(l).ok; }

std::vector<LPrimeVerdict> scan_l_primes(uint64_t limit) {
    std::vector<LPrimeVerdict> out;
    for (uint64_t l = 3; l < limit; l += 2)
        if (numt::is_prime(l)) out.push_back(l_prime_verdict(l));
    return out;
}

namespace {

// m = c * l^e + offset, guarding overflow; nullopt when it leaves uint64.
std::optional<uint64_t> pow_form(uint64_t c, uint64_t l, unsigned e, uint64_t offset) {
    unsigned __int128 v = c;
    for (unsigned i = 0; i < e; ++i) {
        v *= l;
        if (v > ~uint64_t{0}) return std::nullopt;
    }
    v += offset;
    if (v > ~uint64_t{0}) return std::nullopt;
    return static_cast<uint64_t>(v);
}

FamilyEntry make_entry(uint64_t m, std::string provenance, int claimed_mod8) {
    FamilyEntry e;
    e.m = m;
    e.mod8 = static_cast<int>(m % 8);
    e.provenance = std::move(provenance);
    e.congruence_ok = claimed_mod8 < 0 || e.mod8 == claimed_mod8;
    return e;
}

} // namespace

std::vector<FamilyEntry> gen_families(FamilyKind kind, const FamilyParams& p) {
    std::vector<FamilyEntry> out;
    auto require_eligible = [&] {
        if (!l_prime_ok(p.l))
            fail(errc::ineligible_prime, "l = " + std::to_string(p.l) + " fails the prime test");
    };
    switch (kind) {
        case FamilyKind::pow2:
            for (unsigned k = 1; k <= p.kmax && k < 63; ++k)
                out.push_back(make_entry((uint64_t{1} << k) + 1, "2^" + std::to_string(k) + "+1", -1));
            break;
        case FamilyKind::two_pows:
            for (unsigned k = 1; k <= p.kmax && k < 63; ++k)
                for (unsigned s = 1; s <= k; ++s)
                    out.push_back(make_entry((uint64_t{1} << k) + (uint64_t{1} << s) + 1,
                                             "2^" + std::to_string(k) + "+2^" + std::to_string(s) + "+1",
                                             -1));
            break;
        case FamilyKind::l_power:
            require_eligible();
            for (unsigned s = 1; s <= p.smax; ++s)
                for (unsigned k = 1; k <= p.kmax; ++k) {
                    auto m = pow_form(uint64_t{1} << s, p.l, k, 1);
                    if (!m) continue;
                    out.push_back(make_entry(*m,
                                             "2^" + std::to_string(s) + "*" + std::to_string(p.l) +
                                                 "^" + std::to_string(k) + "+1",
                                             -1));
                }
            break;
        case FamilyKind::first_family:
            if (p.l % 4 != 3) fail(errc::ineligible_prime, "first family needs l = 3 mod 4");
            require_eligible();
            for (unsigned k = 0; k <= p.kmax; ++k) {
                auto m = pow_form(2, p.l, 2 * k + 1, 1);
                if (!m) continue;
                out.push_back(make_entry(*m,
                                         "2*" + std::to_string(p.l) + "^" + std::to_string(2 * k + 1) + "+1",
                                         7));
            }
            break;
        case FamilyKind::second_family: {
            if (p.l % 8 != 1 && p.l % 8 != 7)
                fail(errc::ineligible_prime, "second family needs l = 1 or 7 mod 8");
            require_eligible();
            for (unsigned k = 1; k <= p.kmax; ++k) {
                // l = 7 mod 8 needs even exponents to stay 3 mod 8
                unsigned e = (p.l % 8 == 1) ? k : 2 * k;
                auto m = pow_form(2, p.l, e, 1);
                if (!m) continue;
                out.push_back(make_entry(*m,
                                         "2*" + std::to_string(p.l) + "^" + std::to_string(e) + "+1",
                                         3));
            }
            break;
        }
    }
    return out;
}

} // namespace duf
