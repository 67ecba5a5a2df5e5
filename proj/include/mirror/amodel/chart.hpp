#pragma once

#include "mirror/algebra/cyclotomic.hpp"
#include "mirror/algebra/rational.hpp"
#include "mirror/curve/knot.hpp"

#include <array>
#include <string>
#include <vector>

namespace mirror {

// c * prod_i sw_i^{e_i} with formal (possibly fractional) exponents, sw_i = w_i v.
struct WeightMonomial {
    Rational coeff = 1;
    std::array<Rational, 3> exp{};

    WeightMonomial operator*(const WeightMonomial& o) const;
    bool integral() const;
    // Total v power; exponents must sum to an integer.
    long v_power() const;
    // coeff * prod w_i^{e_i}; exponents must be integers.
    Rational value(const std::array<Rational, 3>& w) const;
    std::string to_string() const;
};

// Fixed-point chart with isotropy Z_p. Sector index j in [0, p) stands for h = j/p.
struct OrbifoldChartData {
    long p = 1;
    // Torus weights as multiples of v: (r/p, -k, s/p).
    std::array<Rational, 3> w{};

    long sectors() const { return p; }
    Rational label(long j) const { return frac(j, p); }
    // c_i(h) for i in {1, 2, 3}.
    Rational c(int i, long j) const;
    Rational age(long j) const { return c(1, j) + c(2, j) + c(3, j); }
    long multiply(long j, long jp) const { return pos_mod(j + jp, p); }
    long inverse(long j) const { return pos_mod(-j, p); }
};

OrbifoldChartData chart_data(const KnotParams& kp);

// chi_alpha(h) = w^{alpha j} with w = exp(2 pi i / p).
CyclotomicNumber character(long p, long alpha, long j);
// (1/p) sum_h chi_alpha(h) chi_beta(h^{-1}).
CyclotomicNumber character_inner_product(long p, long alpha, long beta);

struct CRStructure {
    // <1_h, 1_h'>: zero unless h h' = 1.
    bool pairing_nonzero = false;
    WeightMonomial pairing;
    // 1_h * 1_h' = prod sw_i^{product_exp_i} 1_{hh'}.
    long product_sector = 0;
    std::array<Rational, 3> product_exp{};
};
CRStructure cr_ring_data(long j, long jp, const OrbifoldChartData& chart);

// Coordinates of phibar_gamma and of phibar_gamma * phibar_gamma' in the basis 1bar_h.
std::vector<CyclotomicNumber> canonical_basis_vector(long gamma, const OrbifoldChartData& chart);
std::vector<CyclotomicNumber> canonical_basis_product(long gamma, long gammap, const OrbifoldChartData& chart);

}  // namespace mirror
