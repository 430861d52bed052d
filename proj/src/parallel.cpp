#include "torc/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace torc {

int thread_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("TORCFG_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

void parallel_chunks(long long n, const std::function<void(long long, long long)>& fn) {
    if (n <= 0) return;
    long long workers = std::min<long long>(thread_count(), n);
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    long long chunk = (n + workers - 1) / workers;
    for (long long w = 0; w < workers; ++w) {
        long long b = w * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back(fn, b, e);
    }
    for (auto& t : pool) t.join();
}

}  // namespace torc
