#include "mirror/recursion/wgn.hpp"

#include "mirror/curve/vseries.hpp"
#include "mirror/recursion/dvv.hpp"

#include <algorithm>

namespace mirror {

namespace {

// V = -exp(phi) in the layout (q1, eta) with q total degree <= q_order.
PhasedSeries v_series(const KnotParams& kp, int q_order, int eta_order) {
    if (kp.p != 1) throw RecursionError("open potentials need p = 1");
    LayoutPtr L = eta_layout(kp, q_order, eta_order);
    return -phi_newton(kp, L).exp();
}

// (V(eta1) - V(eta2)) / (eta1 - eta2) normalized at eta = 0, then log, keeping mixed terms.
PhasedSeries divided_difference_log(const PhasedSeries& V, int eta, const LayoutPtr& out) {
    const int e1 = static_cast<int>(out->vars.size()) - 2;
    PhasedSeries D(out), D0(out);
    V.for_each([&](const PhasedSeries::Exponents& e, const Rational& c) {
        int m = e[static_cast<size_t>(eta)];
        if (m == 0) return;
        PhasedSeries::Exponents f(out->vars.size(), 0);
        for (int i = 0; i < e1; ++i) f[static_cast<size_t>(i)] = e[static_cast<size_t>(i)];
        if (m == 1) D0.add_term(f, c);
        for (int i = 0; i < m; ++i) {
            f[static_cast<size_t>(e1)] = i;
            f[static_cast<size_t>(e1 + 1)] = m - 1 - i;
            D.add_term(f, c);
        }
    });
    PhasedSeries L = (D * D0.inverse()).log();
    PhasedSeries W(out);
    L.for_each([&](const PhasedSeries::Exponents& e, const Rational& c) {
        if (e[static_cast<size_t>(e1)] > 0 && e[static_cast<size_t>(e1 + 1)] > 0) W.add_term(e, c);
    });
    return W;
}

LayoutPtr annulus_layout(const KnotParams& kp, bool with_q, int q_order, int eta_order) {
    SeriesLayout L;
    if (with_q) {
        L.vars.push_back({"q1", 0, q_order});
        L.capped = {0};
        L.cap = q_order;
        L.phase.q1 = 0;
    }
    int base = static_cast<int>(L.vars.size());
    L.vars.push_back({"eta1", 0, eta_order});
    L.vars.push_back({"eta2", 0, eta_order});
    L.phase.k = kp.k;
    L.phase.r = kp.r;
    L.phase.eta = {base, base + 1};
    return make_layout(std::move(L));
}

}  // namespace

LayoutPtr open_eta_layout(const KnotParams& kp, int n, int eta_order) {
    SeriesLayout L;
    for (int i = 0; i < n; ++i) {
        L.vars.push_back({n == 1 ? std::string("eta") : "eta" + std::to_string(i + 1), 0, eta_order});
        L.phase.eta.push_back(i);
    }
    L.phase.k = kp.k;
    L.phase.r = kp.r;
    return make_layout(std::move(L));
}

LaurentSeries<Rational> framed_w_series(const KnotParams& kp, const Rational& q, int eta_order) {
    // For p = 1 the eta^m coefficient has q degree <= m, so q_order = eta_order is exact.
    PhasedSeries V = v_series(kp, eta_order, eta_order).specialize(q_index(1), -q);
    std::vector<Rational> c(static_cast<size_t>(eta_order + 1), Rational(0));
    const int eta = open_index(kp);
    V.for_each([&](const PhasedSeries::Exponents& e, const Rational& x) { c[static_cast<size_t>(e[static_cast<size_t>(eta)])] += x; });
    c[0] += 1;
    if (c[0] != 0) throw RecursionError("framed branch does not pass through V = -1");
    return LaurentSeries<Rational>(0, c, eta_order + 1);
}

LocalSeries open_theta(const GenusZeroCurve& curve, const LaurentSeries<Rational>& w_of_eta, size_t sigma, int d,
                       int eta_order) {
    FieldRF th = curve.theta_global(sigma, d);
    LocalSeries w = to_local(w_of_eta);
    LocalSeries f = th.laurent_at(Field(-1), eta_order + 1);
    if (f.valuation() < 0) throw RecursionError("theta form has a pole at the open point");
    LocalSeries pulled = f.compose(w) * w.derivative();
    return pulled.truncate(eta_order).integrate();
}

PhasedSeries wgn_potential(const GenusZeroCurve& curve, const KnotParams& kp, const Rational& q,
                           const Multidifferential& omega, int eta_order) {
    LayoutPtr L = open_eta_layout(kp, omega.n, eta_order);
    auto w = framed_w_series(kp, q, eta_order);
    std::map<std::pair<int, int>, LocalSeries> theta;
    auto open = [&](int s, int d) -> const LocalSeries& {
        auto key = std::make_pair(s, d);
        auto it = theta.find(key);
        if (it == theta.end()) it = theta.emplace(key, open_theta(curve, w, static_cast<size_t>(s), d, eta_order)).first;
        return it->second;
    };
    std::map<PhasedSeries::Exponents, Field> acc;
    for (const auto& [idx, c] : omega.terms) {
        std::vector<std::pair<PhasedSeries::Exponents, Field>> partial{{{}, c}};
        for (auto [s, d] : idx) {
            const LocalSeries& t = open(s, d);
            std::vector<std::pair<PhasedSeries::Exponents, Field>> next;
            for (const auto& [e, v] : partial)
                for (int m = 1; m <= eta_order; ++m) {
                    Field x = t.coeff(m);
                    if (is_zero(x)) continue;
                    auto e2 = e;
                    e2.push_back(m);
                    next.emplace_back(std::move(e2), v * x);
                }
            partial = std::move(next);
        }
        for (const auto& [e, v] : partial) {
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, v);
            else
                it->second += v;
        }
    }
    PhasedSeries W(L);
    for (const auto& [e, v] : acc) {
        if (is_zero(v)) continue;
        if (!v.is_base() || !v.base_value().is_rational())
            throw RecursionError("W_{g,n} coefficient is not rational: " + v.to_string());
        W.add_term(e, v.base_value().a());
    }
    return W;
}

PhasedSeries annulus_potential(const KnotParams& kp, const Rational& q, int eta_order) {
    int vo = 2 * eta_order + 1;
    PhasedSeries V = v_series(kp, vo, vo).specialize(q_index(1), -q);
    LayoutPtr out = annulus_layout(kp, false, 0, eta_order);
    // Drop the q variable: the specialized series has q exponent zero.
    SeriesLayout one;
    one.vars = {{"eta", 0, vo}};
    PhasedSeries Ve(make_layout(one));
    V.for_each([&](const PhasedSeries::Exponents& e, const Rational& c) { Ve.add_term({e[static_cast<size_t>(open_index(kp))]}, c); });
    return divided_difference_log(Ve, 0, out);
}

PhasedSeries annulus_potential_symbolic(const KnotParams& kp, int q_order, int eta_order) {
    PhasedSeries V = v_series(kp, q_order, 2 * eta_order + 1);
    return divided_difference_log(V, open_index(kp), annulus_layout(kp, true, q_order, eta_order));
}

PhasedSeries annulus_euler_from_theta(const GenusZeroCurve& curve, const KnotParams& kp, const Rational& q,
                                      int eta_order) {
    Multidifferential c;
    c.g = 0;
    c.n = 2;
    for (size_t s = 0; s < curve.size(); ++s)
        c.add({{static_cast<int>(s), 0}, {static_cast<int>(s), 0}}, Field(frac(kp.r, 2)));
    PhasedSeries w = wgn_potential(curve, kp, q, c, eta_order);
    return w.restrict_to(annulus_layout(kp, false, 0, eta_order));
}

PhasedSeries annulus_q0_B(const KnotParams& kp, int x1_order, int x2_order, int q_order) {
    int eo = static_cast<int>(kp.r) * std::max(x1_order, x2_order);
    PhasedSeries W = annulus_potential_symbolic(kp, q_order, eo);
    // Constant q term.
    PhasedSeries W0 = W.specialize(0, 0);
    PhasedSeries h = W0.h_project(kp.r, {1, 2});
    PhasedSeries e = (h.euler(1) + h.euler(2)).scaled(Rational(-kp.r));
    PhasedSeries X = e.dephase({"X1", "X2"});
    SeriesLayout L;
    L.vars = {{"X1", 0, x1_order}, {"X2", 0, x2_order}};
    PhasedSeries out(make_layout(std::move(L)));
    X.for_each([&](const PhasedSeries::Exponents& ex, const Rational& c) { out.add_term({ex[1], ex[2]}, c); });
    return out;
}

}  // namespace mirror
