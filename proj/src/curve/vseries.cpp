#include "mirror/curve/vseries.hpp"

#include "mirror/algebra/newton.hpp"

#include <functional>
#include <stdexcept>

namespace mirror {

LayoutPtr open_layout(const KnotParams& kp, const OpenLayoutSpec& spec) {
    if (spec.open_orders.size() != spec.open_names.size()) throw std::invalid_argument("open_layout: names/orders mismatch");
    SeriesLayout L;
    for (long a = 1; a <= kp.p; ++a) {
        L.vars.push_back({"q" + std::to_string(a), 0, spec.q_order});
        L.capped.push_back(static_cast<int>(a - 1));
    }
    L.cap = spec.q_order;
    for (size_t j = 0; j < spec.open_names.size(); ++j) {
        L.vars.push_back({spec.open_names[j], 0, spec.open_orders[j]});
        if (spec.phased) L.phase.eta.push_back(static_cast<int>(kp.p + static_cast<long>(j)));
    }
    if (spec.phased) {
        L.phase.k = kp.k;
        L.phase.r = kp.r;
        L.phase.q1 = 0;
    }
    if (spec.laurent_v) L.vars.push_back({"v", spec.v_min, spec.v_max});
    return make_layout(std::move(L));
}

LayoutPtr eta_layout(const KnotParams& kp, int q_order, int eta_order) {
    OpenLayoutSpec spec;
    spec.q_order = q_order;
    spec.open_orders = {eta_order};
    return open_layout(kp, spec);
}

PhasedSeries phi_closed_form(const KnotParams& kp, const LayoutPtr& layout) {
    const long p = kp.p;
    const int eta = open_index(kp);
    const int qo = layout->cap >= 0 ? layout->cap : layout->vars[0].max_exp;
    const int eo = layout->vars[static_cast<size_t>(eta)].max_exp;
    PhasedSeries phi(layout);
    PhasedSeries::Exponents e(layout->vars.size(), 0);
    std::vector<long> a(static_cast<size_t>(p + 1), 0);
    // Enumerate a_1..a_p with total degree <= qo, then b with eta degree <= eo.
    std::function<void(long, long)> rec = [&](long idx, long remaining) {
        if (idx > p) {
            long wsum = 0;
            for (long m = 1; m <= p - 1; ++m) wsum += m * a[static_cast<size_t>(m + 1)];
            for (long b = a[1]; p * b + wsum <= eo; ++b) {
                long deg = p * b + wsum;
                long top = b - 1;
                for (long m = 2; m <= p; ++m) top += a[static_cast<size_t>(m)];
                if (top < 0) continue;  // the excluded all-zero index
                Rational c = inv_factorial(b - a[1]);
                for (long i = 1; i <= p; ++i) c *= inv_factorial(a[static_cast<size_t>(i)]);
                Rational base = Rational(kp.k * deg, kp.r) - a[1];
                base.canonicalize();
                for (long i = 1; i <= top; ++i) c *= base - i;
                for (long i = 1; i <= p; ++i) e[static_cast<size_t>(i - 1)] = static_cast<int>(a[static_cast<size_t>(i)]);
                e[static_cast<size_t>(eta)] = static_cast<int>(deg);
                phi.add_term(e, c);
            }
            return;
        }
        for (long x = 0; x <= remaining; ++x) {
            a[static_cast<size_t>(idx)] = x;
            rec(idx + 1, remaining - x);
        }
        a[static_cast<size_t>(idx)] = 0;
    };
    rec(1, qo);
    return phi;
}

namespace {

// exp(c * phi) for rational c.
PhasedSeries exp_scaled(const PhasedSeries& phi, const Rational& c) { return phi.scaled(c).exp(); }

}  // namespace

PhasedSeries framed_curve_residual(const KnotParams& kp, const PhasedSeries& phi) {
    const LayoutPtr& L = phi.layout_ptr();
    const long p = kp.p;
    const int eta = open_index(kp);
    PhasedSeries one = PhasedSeries::constant(L, 1);
    PhasedSeries::Exponents e(L->vars.size(), 0);
    e[static_cast<size_t>(eta)] = static_cast<int>(p);
    PhasedSeries eta_p = PhasedSeries::monomial(L, e, 1);
    Rational kp_r(kp.k * p, kp.r);
    kp_r.canonicalize();
    // eta^p e^{kp phi/r} + 1 - e^phi + q1 eta^p e^{(kp/r - 1) phi} + sum_m q_{m+1} eta^m e^{k m phi/r}.
    PhasedSeries G = eta_p * exp_scaled(phi, kp_r) + one - phi.exp();
    G += PhasedSeries::variable(L, q_index(1)) * eta_p * exp_scaled(phi, kp_r - 1);
    for (long m = 1; m <= p - 1; ++m) {
        PhasedSeries::Exponents em(L->vars.size(), 0);
        em[static_cast<size_t>(q_index(static_cast<int>(m + 1)))] = 1;
        em[static_cast<size_t>(eta)] = static_cast<int>(m);
        Rational c(kp.k * m, kp.r);
        c.canonicalize();
        G += PhasedSeries::monomial(L, em, 1) * exp_scaled(phi, c);
    }
    return G;
}

PhasedSeries phi_newton(const KnotParams& kp, const LayoutPtr& layout) {
    SeriesMap F = [&](const PhasedSeries& phi) { return framed_curve_residual(kp, phi); };
    // dG/dphi at the base point (eta = q = 0, phi = 0) is -1; the full derivative is only
    // needed there.
    SeriesMap dF = [&](const PhasedSeries& phi) {
        (void)phi;
        return PhasedSeries::constant(layout, -1);
    };
    return newton_implicit_solve(F, dF, PhasedSeries(layout));
}

PhasedSeries solve_v_series(const KnotParams& kp, const LayoutPtr& layout) { return -phi_newton(kp, layout); }

PhasedSeries w01_series(const KnotParams& kp, const PhasedSeries& phi) {
    const int eta = open_index(kp);
    PhasedSeries w(phi.layout_ptr());
    phi.for_each([&](const PhasedSeries::Exponents& e, const Rational& c) {
        int m = e[static_cast<size_t>(eta)];
        if (m == 0) throw std::domain_error("w01_series: v - v(0) has an eta^0 term");
        w.add_term(e, c / m);
    });
    return w;
}

PhasedSeries disk_potential_B(const KnotParams& kp, const PhasedSeries& phi) {
    const int eta = open_index(kp);
    PhasedSeries h = w01_series(kp, phi).h_project(kp.r, {eta});
    return h.dephase({"X"}).scaled(-kp.r);
}

}  // namespace mirror
