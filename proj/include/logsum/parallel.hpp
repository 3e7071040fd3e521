#ifndef LOGSUM_PARALLEL_HPP
#define LOGSUM_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace logsum {

// Runs body(i) for i in [0, count) on up to jobs threads. Work items must not
// share mutable state; callers own deterministic merging by index.
inline void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    };
    int n_threads = std::min(jobs, count);
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace logsum

#endif
