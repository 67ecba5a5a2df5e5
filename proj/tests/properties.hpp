#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mirror {

struct SuiteResult {
    std::string name;
    int instances = 0;
    int failures = 0;
    std::string first_failure;
};

// Randomized property suites, each run on `instances` draws from a generator seeded with `seed`.
std::vector<SuiteResult> run_property_suites(std::uint64_t seed, int instances);

}  // namespace mirror
