#pragma once

#include "mirror/curve/spectral.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mirror {

// (sigma, index) per argument.
using FormIndex = std::vector<std::pair<int, int>>;

// sum c[(s_1,d_1),...,(s_n,d_n)] prod_i theta^{d_i}_{s_i}(p_i).
struct Multidifferential {
    int g = 0, n = 0;
    std::map<FormIndex, Field> terms;

    void add(const FormIndex& idx, const Field& c);
    bool operator==(const Multidifferential& o) const { return g == o.g && n == o.n && terms == o.terms; }
    // First index where the coefficients differ, or an empty string.
    static std::string first_difference(const Multidifferential& a, const Multidifferential& b);
    // Invariance under every permutation of the arguments.
    bool is_symmetric() const;
    std::string to_json() const;
};

std::string index_string(const FormIndex& idx);

}  // namespace mirror
