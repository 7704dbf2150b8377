#pragma once

#include <thread>
#include <vector>

#include "sdlab/numeric.hpp"

namespace sdlab {

inline int effective_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Splits [0, total) into contiguous chunks, one worker thread per chunk.
// Callers merge per-chunk results themselves; merging by ascending chunk
// index keeps results independent of the partitioning.
template <class Fn>
void parallel_chunks(u64 total, int threads, Fn fn) {
    threads = effective_threads(threads);
    if (total == 0) return;
    u64 nchunks = std::min<u64>(static_cast<u64>(threads), total);
    if (nchunks <= 1) {
        fn(0, u64(0), total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    u64 per = total / nchunks, extra = total % nchunks, begin = 0;
    for (u64 c = 0; c < nchunks; ++c) {
        u64 len = per + (c < extra ? 1 : 0);
        u64 end = begin + len;
        pool.emplace_back([&fn, c, begin, end] { fn(static_cast<int>(c), begin, end); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

}  // namespace sdlab
