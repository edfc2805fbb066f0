#include "cforge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cforge {

namespace {

std::atomic<unsigned> g_override{0};

unsigned default_workers() {
    static const unsigned value = [] {
        if (const char* env = std::getenv("CONGRUENCE_FORGE_THREADS")) {
            try {
                const long parsed = std::stol(env);
                if (parsed >= 1) return static_cast<unsigned>(parsed);
            } catch (const std::exception&) {
                // unparsable values fall through to the hardware default
            }
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }();
    return value;
}

}  // namespace

unsigned worker_count() {
    const unsigned o = g_override.load(std::memory_order_relaxed);
    return o != 0 ? o : default_workers();
}

void set_worker_count(unsigned n) { g_override.store(n, std::memory_order_relaxed); }

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    if (end <= begin) return;
    const std::size_t total = end - begin;
    const std::size_t workers = std::min<std::size_t>(worker_count(), total);
    if (workers <= 1) {
        body(begin, end);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                body(lo, hi);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace cforge
