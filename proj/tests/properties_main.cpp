#include "properties.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

// Usage: mirror_properties [seed] [instances]
int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20240601;
    int instances = argc > 2 ? std::stoi(argv[2]) : 20;
    int failed = 0;
    for (const auto& s : mirror::run_property_suites(seed, instances)) {
        std::cout << (s.failures ? "FAIL" : "PASS") << "  " << s.name << "  (" << s.instances - s.failures << "/" << s.instances
                  << ")";
        if (s.failures) std::cout << "  " << s.first_failure;
        std::cout << '\n';
        failed += s.failures ? 1 : 0;
    }
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
