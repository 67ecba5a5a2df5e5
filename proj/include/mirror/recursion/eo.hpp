#pragma once

#include "mirror/curve/spectral.hpp"
#include "mirror/recursion/multidiff.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace mirror {

// Standard: kernel int_{pbar}^{p} B / (2 (y(p) - y(pbar)) dx(p)). Literal: the same kernel
// with the integral taken from p to pbar, which multiplies omega_{g,n} by (-1)^n.
enum class Orientation { Standard, Literal };

// Coefficients on prod_i beta^{m_i}_{s_i}(p_i), beta^m_s = Res B(., p') zeta_s(p')^{-m-1}.
using BetaForm = std::map<FormIndex, Field>;

// Eynard-Orantin recursion on a genus-zero curve, with the kernel attached to the last argument.
// Results are cached per (g, n); safe for concurrent calls.
class EORecursion {
public:
    explicit EORecursion(const GenusZeroCurve& curve, Orientation orientation = Orientation::Standard);

    // omega_{g,n} in the theta basis; 2g - 2 + n > 0.
    Multidifferential omega(int g, int n);
    BetaForm beta_form(int g, int n);

    const GenusZeroCurve& curve() const { return curve_; }

private:
    BetaForm compute(int g, int n);

    const GenusZeroCurve& curve_;
    int sign_;
    std::mutex mu_;
    std::mutex compute_mu_;
    std::map<std::pair<int, int>, BetaForm> cache_;
};

// Converts a beta-basis form (even indices only) to the theta basis.
Multidifferential theta_basis(int g, int n, const BetaForm& form);

}  // namespace mirror
