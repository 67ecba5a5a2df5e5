#pragma once

#include "mirror/algebra/cyclotomic.hpp"
#include "mirror/algebra/poly.hpp"
#include "mirror/algebra/series.hpp"
#include "mirror/amodel/chart.hpp"
#include "mirror/curve/knot.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace mirror {

// c * v^vpow.
struct VMonomial {
    Rational coeff = 0;
    long vpow = 0;
    VMonomial operator*(const VMonomial& o) const { return {coeff * o.coeff, vpow + o.vpow}; }
    bool operator==(const VMonomial&) const = default;
    std::string to_string() const;
};

// v^vpow * series in X.
struct VSeries {
    long vpow = 0;
    PhasedSeries series;
};

// Calls fn on every exponent vector of length n with entries >= 0 and total <= max_total.
void for_each_bounded_exponent(int n, int max_total, const std::function<void(const std::vector<int>&)>& fn);

// q1..qp (total degree capped) followed by the given open variables.
LayoutPtr q_open_layout(long p, int q_order, const std::vector<std::pair<std::string, int>>& open);
LayoutPtr x_layout(int x_order, const std::string& name = "X");

// Sector index j of h = <mu r / p>.
long disk_sector(long mu, const KnotParams& kp);
VMonomial disk_factor(long mu, const KnotParams& kp);

// Phi_a^h(X) = (1/p) sum_{<mu r/p> = h} D'(mu) (mu/v)^{a+2} X^mu.
VSeries phi_series(long h_index, long a, int x_order, const KnotParams& kp);
// (1/v) X d/dX.
VSeries phi_ladder_step(const VSeries& phi);

// xi_a^alpha = p sum_h chi_alpha(-h) prod (w_i v)^{1 - c_i(h)} Phi_a^h, kept term by term so that
// fractional weight powers and phases stay formal.
struct XiTerm {
    long h_index = 0;
    CyclotomicNumber phase;
    WeightMonomial weight;
    VSeries phi;
};
struct XiSeries {
    long alpha = 0;
    long a = 0;
    std::vector<XiTerm> terms;
};
XiSeries xi_series(long alpha, long a, int x_order, const KnotParams& kp);
// Collapses to a rational series in X when every phase is rational and every weight power integral.
VSeries xi_rational(const XiSeries& xi, const KnotParams& kp);

struct MirrorMap {
    std::string tau1 = "log(q1)";
    // tau_a for a = 2..p.
    std::vector<PhasedSeries> tau;
};
MirrorMap mirror_map(const KnotParams& kp, int q_order);

// J_{0,h}(tau_2(q), z) = z^{z_power} sum_beta q^beta R_beta(u), u = v / z.
struct JCoefficient {
    long h_index = 0;
    long z_power = 0;
    std::map<std::vector<int>, RationalFunction<Rational>> terms;
    std::string to_string() const;
};
JCoefficient j_coefficient(long h_index, const KnotParams& kp, int q_order);

// Closed-form disk potential in (q, X).
PhasedSeries disk_potential_A(const KnotParams& kp, int q_order, int x_order);

// Disk potential through D'(mu) and J_{0,h}(v/mu). Every coefficient's v power is checked to vanish;
// the v powers met are reported through v_powers when given.
PhasedSeries disk_potential_J(const KnotParams& kp, int q_order, int x_order, std::vector<long>* v_powers = nullptr);

struct AnnulusQ0 {
    // (X1 d/dX1 + X2 d/dX2) F02 at q = 0 and v = 1.
    PhasedSeries euler;
    // F02 itself, without constant term.
    PhasedSeries potential;
};
AnnulusQ0 annulus_q0(const KnotParams& kp, int x1_order, int x2_order);

}  // namespace mirror
