// Acceptance suite: runs every criterion at its pinned parameters and prints
// one pass/fail line per criterion. Exit code 0 iff all pass.
#include <chrono>
#include <iostream>

#include "tcfa/verify.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    auto results = [] {
        return tcfa::acceptance_criteria();
    };
    auto t0 = clock::now();
    auto checks = results();
    auto t1 = clock::now();
    bool all_pass = true;
    int index = 0;
    for (const auto& r : checks) {
        ++index;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << index << ": " << r.name;
        if (!r.detail.empty()) std::cout << " — " << r.detail;
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    double seconds = std::chrono::duration<double>(t1 - t0).count();
    std::cout << (all_pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << checks.size()
              << " criteria, " << seconds << "s)\n";
    return all_pass ? 0 : 1;
}
