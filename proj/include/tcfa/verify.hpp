#pragma once

#include <string>
#include <vector>

namespace tcfa {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample (n,d,k,q) or a short summary
};

// Named verification suites driven by the CLI: "calibration" (dual-character
// structure, bar-complex internals), "oracle" (point counts, Betti numbers),
// "all" (every acceptance criterion).
std::vector<CheckResult> verification_suite(const std::string& suite, int max_degree);

// The acceptance criteria at their pinned parameters (graded degrees up to 6,
// Betti numbers up to 7). One result per criterion.
std::vector<CheckResult> acceptance_criteria();

}  // namespace tcfa
