#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace fatpoints {

// Degree of internal parallelism. Results never depend on it.
struct Execution {
    unsigned threads = 1;

    static Execution hardware() { return {std::max(1u, std::thread::hardware_concurrency())}; }
};

// Calls body(begin, end, chunk) on `chunks` contiguous ranges covering
// [0, count). Chunk boundaries depend only on (count, chunks).
template <class Body>
void parallel_chunks(std::size_t count, std::size_t chunks, const Execution& exec, Body&& body) {
    chunks = std::max<std::size_t>(1, std::min(chunks, count));
    auto bound = [&](std::size_t c) { return count * c / chunks; };
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(exec.threads, chunks));
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) body(bound(c), bound(c + 1), c);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < chunks; c += workers) body(bound(c), bound(c + 1), c);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace fatpoints
