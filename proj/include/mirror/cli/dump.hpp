#pragma once

#include "mirror/algebra/rational.hpp"

#include <string>
#include <vector>

namespace mirror {

struct DumpOptions {
    long p = 1, r = 1, s = 1;
    int q_order = 3;
    // X-degree; eta series run to eta-degree r * x_order.
    int x_order = 3;
    int z_order = 4;
    Rational q = frac(1, 7);
    // "tsv" or "json".
    std::string format = "tsv";
    int g = 0, n = 0;
};

struct DumpFile {
    // Appended to the output prefix; empty for a single-file dump.
    std::string suffix;
    std::string content;
};

// Selectors: v, w01, tau, J, F01, omega, rcheck, rlimit. UsageError on an unknown selector.
std::vector<DumpFile> dump_selector(const std::string& selector, const DumpOptions& o);

const std::vector<std::string>& dump_selectors();

}  // namespace mirror
