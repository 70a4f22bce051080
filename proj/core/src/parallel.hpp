#pragma once

#include "linfkit/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lk::detail {

// Runs body(i, report) for i in [0, n) on a small thread pool; the per-index
// reports are merged in index order so the output does not depend on timing.
template <class Body>
Report parallel_checks(std::size_t n, std::size_t witness_cap, Body body)
{
    std::vector<Report> parts(n, Report(witness_cap));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                body(i, parts[i]);
            } catch (...) {
                std::lock_guard<std::mutex> g(error_lock);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::size_t threads = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    Report r(witness_cap);
    for (const auto& p : parts)
        r.merge(p);
    return r;
}

}  // namespace lk::detail
