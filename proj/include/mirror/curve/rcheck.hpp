#pragma once

#include "mirror/curve/spectral.hpp"

#include <string>
#include <vector>

namespace mirror {

// Matrix of z-series; entry[s][sp][m] = [z^m] of the (s, sp) entry, known below `order`.
struct FieldSeriesMatrix {
    int order = 0;
    std::vector<std::vector<std::vector<Field>>> entry;
    size_t size() const { return entry.size(); }
    Field at(size_t s, size_t sp, int m) const { return entry.at(s).at(sp).at(static_cast<size_t>(m)); }
};

// R-check^{s}_{sp}(z): stationary phase of theta^0_sp along the thimble of P_s, as entry[s][sp].
FieldSeriesMatrix r_check_matrix(const GenusZeroCurve& curve, int order);
// sum_{s''} R^{s''}_{s}(-z) R^{s''}_{sp}(z), the transpose-reflect product.
FieldSeriesMatrix r_check_unitarity(const FieldSeriesMatrix& r);

// B-check table: entry[s][sp][k][l].
using BCheckTable = std::vector<std::vector<std::vector<std::vector<Field>>>>;
// From the Bergman expansion: (2k-1)!!(2l-1)!! / 2^{k+l+1} B_{2k,2l}.
BCheckTable b_check_from_bergman(const GenusZeroCurve& curve, int max_index);
// From [z^k w^l] (delta - sum_{s''} R^{s}_{s''}(z) R^{sp}_{s''}(w)) / (z + w); needs r.order > 2 max_index + 1.
BCheckTable b_check_from_r(const FieldSeriesMatrix& r, int max_index);

// theta-hat^k_sigma as the dt coefficient of d xi-hat^k, xi-hat^k = (-1)^k (d/dx)^{k-1} (theta^0 / dx).
FieldRF theta_hat_global(const GenusZeroCurve& curve, size_t sigma, int k);

// Checks theta^k_s = sum_{sp} sum_j [z^j] R(z) theta-hat^{k-j}_sp for k < order, contracting
// R^{s}_{sp} (transposed = false) or R^{sp}_{s} (transposed = true). Returns the first failing
// (s, k) as text, or an empty string.
std::string check_theta_hat(const GenusZeroCurve& curve, const FieldSeriesMatrix& r, int order, bool transposed);

}  // namespace mirror
