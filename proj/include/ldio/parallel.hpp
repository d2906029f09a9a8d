// Deterministic fork-join over an index range: fixed chunking, one worker
// per chunk group, partial results combined in chunk order. Thread count
// never changes any result.

#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace ldio {

inline uint32_t hardware_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Splits [0, count) into at most `threads` contiguous spans and invokes
// fn(span_index, begin, end) on each, in parallel. Exceptions from workers
// are rethrown on the caller.
template <class Fn>
void parallel_spans(uint64_t count, uint32_t threads, Fn&& fn) {
    if (threads == 0) threads = hardware_threads();
    const uint64_t spans = std::min<uint64_t>(threads, count == 0 ? 1 : count);
    if (spans <= 1) {
        fn(size_t{0}, uint64_t{0}, count);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(spans);
    workers.reserve(spans);
    for (uint64_t s = 0; s < spans; ++s) {
        const uint64_t begin = count * s / spans;
        const uint64_t end = count * (s + 1) / spans;
        workers.emplace_back([&, s, begin, end] {
            try {
                fn(static_cast<size_t>(s), begin, end);
            } catch (...) {
                errors[s] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

// Sum of fn(begin, end) over a deterministic chunking of [0, count).
template <class Fn>
uint64_t parallel_sum(uint64_t count, uint32_t threads, Fn&& fn) {
    if (threads == 0) threads = hardware_threads();
    const uint64_t spans = std::min<uint64_t>(threads, count == 0 ? 1 : count);
    std::vector<uint64_t> partial(spans, 0);
    parallel_spans(count, threads, [&](size_t s, uint64_t begin, uint64_t end) {
        partial[s] = fn(begin, end);
    });
    uint64_t total = 0;
    for (const uint64_t v : partial) total += v;
    return total;
}

}  // namespace ldio
