#pragma once

#include "mirror/algebra/series.hpp"

#include <functional>
#include <vector>

namespace mirror {

using SeriesMap = std::function<PhasedSeries(const PhasedSeries&)>;

// Solves F(W) = 0 with W = W0 + (terms of positive degree). The Jacobian dF/dW is
// evaluated once at the base point and the chord iteration W <- W - F(W)/J0 runs
// until F(W) vanishes identically within the truncation.
PhasedSeries newton_implicit_solve(const SeriesMap& F, const SeriesMap& dF, const PhasedSeries& W0,
                                   int max_iterations = 2048);

// F(W) = sum_j coeffs[j] W^j with series coefficients.
PhasedSeries newton_implicit_solve(const std::vector<PhasedSeries>& coeffs, const PhasedSeries& W0,
                                   int max_iterations = 2048);

// Evaluates sum_j coeffs[j] W^j by Horner's rule.
PhasedSeries evaluate_polynomial(const std::vector<PhasedSeries>& coeffs, const PhasedSeries& W);

}  // namespace mirror
