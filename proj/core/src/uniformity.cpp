#include "duf/uniformity.hpp"

#include <atomic>
#include <numeric>

#include "duf/parallel.hpp"

namespace duf {

namespace {

void require_scale(const FieldCtx& ctx) {
    if (ctx.n() > 28) fail(errc::scale_error, "dense DDT work is capped at n <= 28");
}

struct RowStat {
    uint32_t max = 0;
    uint64_t count_at_max = 0;
    uint64_t first_beta = 0;
};

// Tally one derivative row; returns the row maximum, the number of beta
// attaining it and the first such beta.
RowStat scan_row(const FqPoly& D, uint64_t q, std::vector<uint32_t>& buf) {
    RowStat st;
    if (D.degree() <= 0) {
        st.max = static_cast<uint32_t>(q);
        st.count_at_max = 1;
        st.first_beta = D.coeff(0).bits;
        return st;
    }
    std::fill(buf.begin(), buf.end(), 0);
    for (uint64_t x = 0; x < q; ++x) {
        uint64_t b = eval(D, FqElem{x}).bits;
        uint32_t v = ++buf[b];
        if (v > st.max) {
            st.max = v;
            st.count_at_max = 1;
            st.first_beta = b;
        } else if (v == st.max) {
            ++st.count_at_max;
        }
    }
    return st;
}

} // namespace

DdtRow ddt_row(const FqPoly& f, FqElem alpha) {
    if (alpha == fq_zero) fail(errc::zero_direction, "alpha = 0");
    require_scale(f.ctx());
    const uint64_t q = f.ctx().elem_mask() + 1;
    FqPoly D = d_alpha(f, alpha);
    DdtRow row(q, 0);
    if (D.degree() <= 0) {
        row[D.coeff(0).bits] = static_cast<uint32_t>(q);
        return row;
    }
    for (uint64_t x = 0; x < q; ++x) ++row[eval(D, FqElem{x}).bits];
    return row;
}

DeltaResult delta(const FqPoly& f, bool exact_pairs, bool keep_per_alpha, unsigned threads) {
    const int m = f.degree();
    if (m < 2) fail(errc::invalid_argument, "delta needs deg f >= 2");
    require_scale(f.ctx());
    const uint64_t q = f.ctx().elem_mask() + 1;
    // Odd-degree rows are bounded by m-1; even-degree rows can degenerate to a
    // constant derivative, so only a full row (count q) allows an early stop.
    const uint32_t threshold = (m % 2 == 1) ? static_cast<uint32_t>(m - 1) : static_cast<uint32_t>(q);

    const unsigned t = effective_threads(threads, q - 1);
    struct Local {
        uint32_t max = 0;
        uint64_t pairs = 0;
        std::optional<std::pair<FqElem, FqElem>> example;
    };
    std::vector<Local> locals(t);
    std::vector<uint32_t> per_alpha;
    if (keep_per_alpha) per_alpha.assign(q - 1, UINT32_MAX);
    std::atomic<bool> found{false};

    parallel_chunks(1, q, t, [&](unsigned w, uint64_t lo, uint64_t hi) {
        Local& L = locals[w];
        std::vector<uint32_t> buf(q, 0);
        for (uint64_t a = lo; a < hi; ++a) {
            if (!exact_pairs && found.load(std::memory_order_relaxed)) return;
            RowStat st = scan_row(d_alpha(f, FqElem{a}), q, buf);
            if (keep_per_alpha) per_alpha[a - 1] = st.max;
            if (st.max > L.max) {
                L.max = st.max;
                L.pairs = st.count_at_max;
                L.example = {{FqElem{a}, FqElem{st.first_beta}}};
            } else if (st.max == L.max) {
                L.pairs += st.count_at_max;
            }
            if (!exact_pairs && st.max >= threshold) {
                found.store(true, std::memory_order_relaxed);
                return;
            }
        }
    });

    DeltaResult out;
    for (const auto& L : locals) {
        if (L.max > out.delta) {
            out.delta = L.max;
            out.achieving_pairs = L.pairs;
            out.example_pair = L.example;
        } else if (L.max == out.delta) {
            out.achieving_pairs += L.pairs;
            if (!out.example_pair) out.example_pair = L.example;
        }
    }
    out.exact = exact_pairs || !found.load();
    if (keep_per_alpha) {
        out.per_alpha_max = std::move(per_alpha);
        out.per_alpha_partial = found.load();
    }
    return out;
}

Fraction achieving_fraction(const FqPoly& f, unsigned threads) {
    DeltaResult r = delta(f, /*exact_pairs=*/true, false, threads);
    const unsigned n = f.ctx().n();
    Fraction fr{r.achieving_pairs, uint64_t{1} << (2 * n)};
    uint64_t g = std::gcd(fr.num, fr.den);
    if (g) {
        fr.num /= g;
        fr.den /= g;
    }
    return fr;
}

bool splits_simply(const FqPoly& f, FqElem alpha, FqElem beta) {
    if (alpha == fq_zero) fail(errc::zero_direction, "alpha = 0");
    require_scale(f.ctx());
    FqPoly D = d_alpha(f, alpha);
    const int d = D.degree();
    if (d <= 0) return false;
    const uint64_t q = f.ctx().elem_mask() + 1;
    uint64_t count = 0;
    for (uint64_t x = 0; x < q; ++x)
        if (eval(D, FqElem{x}) == beta) ++count;
    return count == static_cast<uint64_t>(d);
}

} // namespace duf
