#include "mirror/algebra/newton.hpp"

#include <stdexcept>

namespace mirror {

PhasedSeries newton_implicit_solve(const SeriesMap& F, const SeriesMap& dF, const PhasedSeries& W0,
                                   int max_iterations) {
    if (W0.size() > 1 || (W0.size() == 1 && sgn(W0.constant_term()) == 0))
        throw std::invalid_argument("newton_implicit_solve: base point must be a constant");
    PhasedSeries f0 = F(W0);
    if (sgn(f0.constant_term()) != 0) throw std::domain_error("newton_implicit_solve: no solution at order 0");
    Rational j0 = dF(W0).constant_term();
    if (sgn(j0) == 0) throw std::domain_error("newton_implicit_solve: singular Jacobian at the base point");
    Rational inv = 1 / j0;
    PhasedSeries W = W0;
    PhasedSeries r = f0;
    for (int it = 0; it < max_iterations; ++it) {
        if (r.is_zero()) return W;
        W -= r.scaled(inv);
        r = F(W);
    }
    throw std::domain_error("newton_implicit_solve: iteration did not converge within the truncation");
}

PhasedSeries evaluate_polynomial(const std::vector<PhasedSeries>& coeffs, const PhasedSeries& W) {
    if (coeffs.empty()) return PhasedSeries(W.layout_ptr());
    PhasedSeries acc = coeffs.back();
    for (size_t j = coeffs.size() - 1; j-- > 0;) acc = acc * W + coeffs[j];
    return acc;
}

PhasedSeries newton_implicit_solve(const std::vector<PhasedSeries>& coeffs, const PhasedSeries& W0,
                                   int max_iterations) {
    std::vector<PhasedSeries> deriv;
    for (size_t j = 1; j < coeffs.size(); ++j) deriv.push_back(coeffs[j].scaled(static_cast<long>(j)));
    SeriesMap F = [&](const PhasedSeries& W) { return evaluate_polynomial(coeffs, W); };
    SeriesMap dF = [&](const PhasedSeries& W) {
        if (deriv.empty()) return PhasedSeries(W.layout_ptr());
        return evaluate_polynomial(deriv, W);
    };
    return newton_implicit_solve(F, dF, W0, max_iterations);
}

}  // namespace mirror
