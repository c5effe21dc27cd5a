#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sevlab {

struct CheckResult {
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// A named verification. `criterion` numbers the acceptance criterion the
/// check belongs to; `suite` is one of core, triangulations, characters, highrank.
struct Check {
    std::string name;
    std::string suite;
    int criterion = 0;
    bool optional = false;
    std::function<CheckResult()> run;
};

/// All registered checks; random points are drawn from `seed`.
std::vector<Check> verification_checks(std::uint64_t seed);

/// Checks of one suite, or every suite for "all". Throws UnsupportedCase for other names.
std::vector<Check> suite_checks(const std::string& suite, std::uint64_t seed, bool skip_optional);

/// Joins values as "a,b,c".
std::string join(const std::vector<std::string>& parts, const std::string& sep = ",");

}  // namespace sevlab
