// Acceptance suite: runs every verification criterion at full size and
// prints one pass/fail line per criterion. Exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <thread>

#include "war/verify.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    const int jobs = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
    int failed = 0;
    const int total = war::criterion_count();
    for (int i = 1; i <= total; ++i) {
        const auto start = clock::now();
        const war::CriterionResult result = war::run_criterion(i, jobs);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            clock::now() - start)
                            .count();
        std::printf("[%2d/%d] %s  %s (%zu checks, %lldms)\n", i, total,
                    result.pass ? "PASS" : "FAIL", result.name.c_str(),
                    result.claims.size(), static_cast<long long>(ms));
        if (!result.pass) {
            ++failed;
            for (const auto& claim : result.claims) {
                if (claim.pass) continue;
                std::printf("       %s %s: expected %s, observed %s\n",
                            claim.id.c_str(), claim.params.dump().c_str(),
                            claim.expected.c_str(), claim.observed.c_str());
            }
        }
        std::fflush(stdout);
    }
    std::printf("ACCEPTANCE: %d/%d criteria passed\n", total - failed, total);
    return failed == 0 ? 0 : 1;
}
