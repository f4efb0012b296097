#pragma once

#include <thread>
#include <vector>

namespace rk {

// Run fn(i) for i in [0, count) on up to `jobs` threads. Work is split by
// index stripe; callers write to per-index slots, so results are identical
// for any job count.
template <typename Fn>
void parallel_for(long long count, int jobs, Fn&& fn) {
    if (count <= 0) return;
    if (jobs < 1) jobs = 1;
    jobs = static_cast<int>(std::min<long long>(jobs, count));
    if (jobs == 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&fn, t, jobs, count] {
            for (long long i = t; i < count; i += jobs) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace rk
