#include "parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gp {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("GPL_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(long long count, int threads, const std::function<void(long long)>& fn) {
    if (count <= 0) return;
    int workers = resolve_threads(threads);
    if (static_cast<long long>(workers) > count) workers = static_cast<int>(count);

    if (workers == 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }

    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto run_slice = [&](long long begin, long long end) {
        try {
            for (long long i = begin; i < end; ++i) fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    long long chunk = count / workers;
    long long extra = count % workers;
    long long begin = 0;
    for (int w = 0; w < workers; ++w) {
        long long len = chunk + (w < extra ? 1 : 0);
        pool.emplace_back(run_slice, begin, begin + len);
        begin += len;
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gp
