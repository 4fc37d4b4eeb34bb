#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace germ::suites {

inline constexpr std::uint64_t kDefaultSeed = 20230917;

struct SuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t skipped = 0; ///< cases whose generator found no admissible instance
    std::size_t failures = 0;
    /// One entry per failure: the mismatch, the inputs, and a reproducer command line.
    std::vector<std::string> reports;

    bool ok() const { return failures == 0; }
};

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();
std::size_t default_cases(const std::string& name);

/// Seed of case `index` of suite `name` under the run seed.
std::uint64_t case_seed(std::uint64_t seed, const std::string& name, std::size_t index);

/// Throws InputError on an unknown suite name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases);
/// Replays one case from its case seed (as printed in a failure report).
SuiteResult run_case(const std::string& name, std::uint64_t case_seed);

} // namespace germ::suites
