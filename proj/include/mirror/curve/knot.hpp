#pragma once

#include <stdexcept>
#include <string>

namespace mirror {

// Torus-knot data: r + s = p k, p, r, s pairwise coprime, r delta + k gamma = 1.
struct KnotParams {
    long p = 1, r = 1, s = 1, k = 2;
    long gamma = 0, delta = 1;
    std::string to_string() const;
};

class KnotError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Validates (p, r, s) and completes the framing with the smallest gamma >= 0.
KnotParams validate_knot(long p, long r, long s);

}  // namespace mirror
