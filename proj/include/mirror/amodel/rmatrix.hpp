#pragma once

#include "mirror/algebra/cyclotomic.hpp"
#include "mirror/algebra/rational.hpp"
#include "mirror/amodel/chart.hpp"
#include "mirror/curve/knot.hpp"

#include <array>
#include <vector>

namespace mirror {

// B_m from t/(e^t - 1) = sum B_m t^m / m! (so B_1 = -1/2). Memoized, thread-safe.
Rational bernoulli_number(long m);
// B_m(x) from t e^{tx}/(e^t - 1) = sum B_m(x) t^m / m!.
Rational bernoulli_polynomial(long m, const Rational& x);

// Square matrix of truncated series in z / v: entry[row][col][e] is the coefficient of (z/v)^e, e < order.
struct SeriesMatrix {
    int order = 0;
    std::vector<std::vector<std::vector<CyclotomicNumber>>> entry;
    size_t size() const { return entry.size(); }
    bool operator==(const SeriesMatrix&) const = default;
};

// exp(sum_i sum_{m>=1} (-1)^m / (m(m+1)) B_{m+1}(c_i) (z / w_i)^m) to O(z^order).
std::vector<Rational> bernoulli_exponential(const std::array<Rational, 3>& c, const std::array<Rational, 3>& w, int order);

// M_{delta gamma}(z) = (1/p) sum_h chi_delta(h) chi_gamma(h^{-1}) prod_i exp(...) over the chart sectors.
SeriesMatrix r_matrix_limit(const OrbifoldChartData& chart, int order);
SeriesMatrix r_matrix_limit(const KnotParams& kp, int order);

// R^T(-z) R(z) truncated at the same order.
SeriesMatrix transpose_reflect_product(const SeriesMatrix& R);
SeriesMatrix identity_series_matrix(long p, int order);

}  // namespace mirror
