#ifndef DUF_PARALLEL_HPP
#define DUF_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace duf {

inline unsigned effective_threads(unsigned requested, uint64_t work) {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned t = requested ? requested : (hw ? hw : 1);
    if (work < 2048) t = 1; // not worth spawning for tiny ranges
    if (static_cast<uint64_t>(t) > work && work > 0) t = static_cast<unsigned>(work);
    return t ? t : 1;
}

/// Static contiguous partition of [begin, end): worker w handles one chunk.
/// fn(worker, chunk_begin, chunk_end). Merging per-worker results in worker
/// order gives output independent of the thread count actually used.
template <class Fn>
void parallel_chunks(uint64_t begin, uint64_t end, unsigned threads, Fn&& fn) {
    if (end <= begin) return;
    uint64_t work = end - begin;
    unsigned t = effective_threads(threads, work);
    if (t == 1) {
        fn(0u, begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    uint64_t chunk = work / t, rem = work % t;
    uint64_t at = begin;
    for (unsigned w = 0; w < t; ++w) {
        uint64_t len = chunk + (w < rem ? 1 : 0);
        uint64_t lo = at, hi = at + len;
        at = hi;
        pool.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace duf

#endif
