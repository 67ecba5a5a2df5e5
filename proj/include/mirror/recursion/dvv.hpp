#pragma once

#include "mirror/algebra/rational.hpp"

#include <stdexcept>
#include <vector>

namespace mirror {

class RecursionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// <tau_{k_1} ... tau_{k_n}>_g by the DVV recursion; zero unless sum k_i = 3g - 3 + n.
// Memoized, safe for concurrent use. Throws RecursionError for g < 0 or n = 0.
Rational dvv_intersection(int g, std::vector<int> k);

}  // namespace mirror
