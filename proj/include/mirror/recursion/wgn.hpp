#pragma once

#include "mirror/algebra/series.hpp"
#include "mirror/curve/knot.hpp"
#include "mirror/curve/spectral.hpp"
#include "mirror/recursion/multidiff.hpp"

namespace mirror {

// Layout eta1..etan, each to eta_order, with the eta phase grading of the framing.
LayoutPtr open_eta_layout(const KnotParams& kp, int n, int eta_order);

// V(eta) + 1 on the framed branch at q1 = q (stored phases, p = 1), exact to O(eta^{order+1}).
LaurentSeries<Rational> framed_w_series(const KnotParams& kp, const Rational& q, int eta_order);

// int_0^eta of the pullback of theta^d_sigma, from the global form in V.
LocalSeries open_theta(const GenusZeroCurve& curve, const LaurentSeries<Rational>& w_of_eta, size_t sigma, int d,
                       int eta_order);

// W_{g,n} = int ... int omega_{g,n}: termwise products of open theta integrals. Coefficients
// must be rational after summing over ramification points.
PhasedSeries wgn_potential(const GenusZeroCurve& curve, const KnotParams& kp, const Rational& q,
                           const Multidifferential& omega, int eta_order);

// W_{0,2} = log((V(eta1) - V(eta2)) / (eta1 - eta2)) with the one-variable parts removed.
// Numeric q: layout eta1, eta2. Symbolic q: layout q1, eta1, eta2 with q total degree <= q_order.
PhasedSeries annulus_potential(const KnotParams& kp, const Rational& q, int eta_order);
PhasedSeries annulus_potential_symbolic(const KnotParams& kp, int q_order, int eta_order);

// (eta1 d1 + eta2 d2) W_{0,2} = (r/2) sum_sigma Theta^0_sigma(eta1) Theta^0_sigma(eta2).
PhasedSeries annulus_euler_from_theta(const GenusZeroCurve& curve, const KnotParams& kp, const Rational& q,
                                      int eta_order);

// (X1 d/dX1 + X2 d/dX2)(-r^2 h W_{0,2}) at q = 0, as a series in X1, X2.
PhasedSeries annulus_q0_B(const KnotParams& kp, int x1_order, int x2_order, int q_order = 2);

}  // namespace mirror
