#pragma once

#include <thread>
#include <vector>

#include "leibconf/report.hpp"

namespace leibconf {

// Run per_index(i, report) for i in [0, n) across `jobs` workers. Each worker
// fills its own report; partial reports are merged in index order, so the
// output is deterministic regardless of the worker count.
template <class F>
CheckReport parallel_check(long long n, int jobs, F&& per_index) {
    if (jobs < 1) jobs = 1;
    if (jobs > n) jobs = n > 0 ? static_cast<int>(n) : 1;
    if (jobs == 1) {
        CheckReport out;
        for (long long i = 0; i < n; ++i) per_index(i, out);
        return out;
    }
    std::vector<CheckReport> parts(jobs);
    std::vector<std::string> errors(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int j = 0; j < jobs; ++j) {
        long long b = n * j / jobs, e = n * (j + 1) / jobs;
        workers.emplace_back([&, j, b, e] {
            try {
                for (long long i = b; i < e; ++i) per_index(i, parts[j]);
            } catch (const std::exception& ex) {
                errors[j] = ex.what();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
        if (!e.empty()) throw error(e);
    CheckReport out;
    for (auto& p : parts) out.merge(std::move(p));
    return out;
}

}  // namespace leibconf
