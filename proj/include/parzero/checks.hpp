#pragma once

#include <string>
#include <vector>

namespace parzero {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Invariant suites at desk scale. n_budget steers the largest index used by
// each check; every suite rejects n_budget < 1.
std::vector<CheckResult> check_families(long n_budget);
std::vector<CheckResult> check_zeros(long n_budget);
std::vector<CheckResult> check_asymptotics(long n_budget);
std::vector<CheckResult> check_attractor(long n_budget);
std::vector<CheckResult> check_suite(const std::string& suite, long n_budget);

}  // namespace parzero
