#ifndef PMSKIT_PARALLEL_HPP
#define PMSKIT_PARALLEL_HPP

#include <functional>
#include <thread>
#include <vector>

namespace pmskit {

// Runs fn(i) for i in [0, n); results land in caller-owned slots so the
// outcome is independent of scheduling. threads <= 1 runs inline.
inline void parallel_for(size_t n, int threads, const std::function<void(size_t)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    size_t nt = std::min<size_t>((size_t)threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (size_t t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            for (size_t i = t; i < n; i += nt)
                fn(i);
        });
    for (std::thread& th : pool)
        th.join();
}

} // namespace pmskit

#endif
