#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hopfpfaff {

// Worker cap from HOPF_PFAFF_THREADS; 0 or unset means auto.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (hw > 8) hw = 8;
    if (const char* env = std::getenv("HOPF_PFAFF_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return hw;
}

// Splits [0, count) into contiguous chunks, one worker thread each. Callers
// write results into pre-sized slots so output stays deterministic. The first
// exception thrown by any worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for(size_t count, Fn fn) {
    unsigned workers = thread_budget();
    if (count == 0) return;
    if (workers <= 1 || count == 1) {
        fn(size_t{0}, count);
        return;
    }
    if (workers > count) workers = static_cast<unsigned>(count);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t begin = w * chunk;
        size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace hopfpfaff
