#pragma once

#include "mirror/algebra/series.hpp"
#include "mirror/curve/knot.hpp"

#include <string>
#include <vector>

namespace mirror {

// Variables q1..qp followed by the open variables (eta, or eta1..etan), optionally the
// Laurent variable v. Each q has order q_order and the q total degree is capped at q_order.
struct OpenLayoutSpec {
    int q_order = 3;
    std::vector<int> open_orders{3};
    std::vector<std::string> open_names{"eta"};
    bool phased = true;
    bool laurent_v = false;
    int v_min = 0, v_max = 0;
};
LayoutPtr open_layout(const KnotParams& kp, const OpenLayoutSpec& spec);
LayoutPtr eta_layout(const KnotParams& kp, int q_order, int eta_order);
inline int q_index(int a) { return a - 1; }
inline int open_index(const KnotParams& kp, int j = 0) { return static_cast<int>(kp.p) + j; }

// Writing V = -exp(phi) along the framed branch through (eta, V) = (0, -1), so that
// v = -i pi - phi. Both routes return the stored (phase-graded) series phi.
PhasedSeries phi_closed_form(const KnotParams& kp, const LayoutPtr& layout);
PhasedSeries phi_newton(const KnotParams& kp, const LayoutPtr& layout);

// The framed curve equation G(eta, phi) in stored form; vanishes on the solution branch.
PhasedSeries framed_curve_residual(const KnotParams& kp, const PhasedSeries& phi);

// v + i pi = -phi, computed by the Newton route.
PhasedSeries solve_v_series(const KnotParams& kp, const LayoutPtr& layout);

// W01 = integral_0^eta (v - v(0)) (-d eta / eta): coefficient of eta^m is phi_m / m.
PhasedSeries w01_series(const KnotParams& kp, const PhasedSeries& phi);

// -r * h(W01) with X = eta^r, as a rational series in q and X.
PhasedSeries disk_potential_B(const KnotParams& kp, const PhasedSeries& phi);

}  // namespace mirror
