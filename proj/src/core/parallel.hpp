#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace graphbench {

inline int hardware_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Static contiguous chunking: chunk boundaries depend only on (range, threads),
// so floating-point reductions chunked this way are reproducible for a fixed
// thread count.
template <typename Fn>
void parallel_for(uint64_t begin, uint64_t end, int threads, Fn&& fn) {
    if (end <= begin) return;
    uint64_t n = end - begin;
    if (threads <= 1 || n < 2048) {
        for (uint64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    uint64_t t = static_cast<uint64_t>(threads);
    if (t > n) t = n;
    std::vector<std::thread> pool;
    pool.reserve(t);
    uint64_t chunk = (n + t - 1) / t;
    for (uint64_t w = 0; w < t; ++w) {
        uint64_t lo = begin + w * chunk;
        uint64_t hi = lo + chunk < end ? lo + chunk : end;
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (uint64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// Work-stealing-ish dynamic blocks for skewed per-item cost (adjacency
// intersections, clique expansion). fn(worker, i); combine per-worker partials
// yourself, in worker order, if the result must be deterministic.
template <typename Fn>
void parallel_for_dynamic(uint64_t begin, uint64_t end, int threads, uint64_t block, Fn&& fn) {
    if (end <= begin) return;
    if (threads <= 1) {
        for (uint64_t i = begin; i < end; ++i) fn(0, i);
        return;
    }
    std::atomic<uint64_t> next{begin};
    auto worker = [&](int w) {
        for (;;) {
            uint64_t lo = next.fetch_add(block);
            if (lo >= end) break;
            uint64_t hi = lo + block < end ? lo + block : end;
            for (uint64_t i = lo; i < hi; ++i) fn(w, i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int w = 1; w < threads; ++w) pool.emplace_back(worker, w);
    worker(0);
    for (auto& th : pool) th.join();
}

// Chunk-ordered sum: partials are combined in chunk order.
template <typename T, typename Map>
T parallel_sum(uint64_t begin, uint64_t end, int threads, Map&& map) {
    if (end <= begin) return T{};
    uint64_t n = end - begin;
    if (threads <= 1 || n < 2048) {
        T acc{};
        for (uint64_t i = begin; i < end; ++i) acc += map(i);
        return acc;
    }
    uint64_t t = static_cast<uint64_t>(threads);
    if (t > n) t = n;
    uint64_t chunk = (n + t - 1) / t;
    std::vector<T> partial(t, T{});
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (uint64_t w = 0; w < t; ++w) {
        uint64_t lo = begin + w * chunk;
        uint64_t hi = lo + chunk < end ? lo + chunk : end;
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, w, &partial, &map] {
            T acc{};
            for (uint64_t i = lo; i < hi; ++i) acc += map(i);
            partial[w] = acc;
        });
    }
    for (auto& th : pool) th.join();
    T total{};
    for (const T& p : partial) total += p;
    return total;
}

} // namespace graphbench
