#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mw {

struct CheckResult {
    std::string scope;
    std::string name;
    bool pass = false;
    long cases = 0;        // how many instances were exercised
    std::string detail;    // first failure, or empty
};

struct VerifyOptions {
    int max_n = 8;         // Grassmannian size bound
    int max_degree = 10;   // polynomial degree bound
    std::uint64_t seed = 20240915;
};

// Named invariant suites per module scope; scope "all" runs everything.
// Scopes: tableau, schubert, symfunc, motive, chow-witt, flag.
std::vector<CheckResult> run_verify(const std::string& scope, const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mw
