#include "mirror/amodel/disk.hpp"

#include <stdexcept>

namespace mirror {

std::string VMonomial::to_string() const { return mirror::to_string(coeff) + "*v^" + std::to_string(vpow); }

void for_each_bounded_exponent(int n, int max_total, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == n) {
            fn(e);
            return;
        }
        for (int x = 0; x <= remaining; ++x) {
            e[static_cast<size_t>(i)] = x;
            rec(i + 1, remaining - x);
        }
        e[static_cast<size_t>(i)] = 0;
    };
    rec(0, max_total);
}

LayoutPtr q_open_layout(long p, int q_order, const std::vector<std::pair<std::string, int>>& open) {
    SeriesLayout L;
    for (long a = 1; a <= p; ++a) {
        L.vars.push_back({"q" + std::to_string(a), 0, q_order});
        L.capped.push_back(static_cast<int>(a - 1));
    }
    L.cap = q_order;
    for (const auto& [name, order] : open) L.vars.push_back({name, 0, order});
    return make_layout(std::move(L));
}

LayoutPtr x_layout(int x_order, const std::string& name) {
    SeriesLayout L;
    L.vars.push_back({name, 0, x_order});
    return make_layout(std::move(L));
}

long disk_sector(long mu, const KnotParams& kp) { return pos_mod(mu * kp.r, kp.p); }

VMonomial disk_factor(long mu, const KnotParams& kp) {
    if (mu <= 0) throw std::invalid_argument("disk_factor: winding must be positive");
    bool untwisted = disk_sector(mu, kp) == 0;
    long muk = mu * kp.k;
    // prod_{j=1}^{mu k - 1} (-mu k + j) = (-1)^{mu k - 1} (mu k - 1)!.
    Rational num = Rational(factorial(muk - 1)) * ((muk - 1) % 2 ? -1 : 1);
    Rational c = frac(kp.p, mu) * num * inv_factorial(mu * kp.r / kp.p) * inv_factorial(mu * kp.s / kp.p);
    if (!untwisted) c /= mu;
    return {c, untwisted ? 0 : 1};
}

VSeries phi_series(long h_index, long a, int x_order, const KnotParams& kp) {
    VSeries out;
    bool untwisted = pos_mod(h_index, kp.p) == 0;
    out.vpow = (untwisted ? 0 : 1) - (a + 2);
    out.series = PhasedSeries(x_layout(x_order));
    for (long mu = 1; mu <= x_order; ++mu) {
        if (disk_sector(mu, kp) != pos_mod(h_index, kp.p)) continue;
        VMonomial d = disk_factor(mu, kp);
        out.series.add_term({static_cast<int>(mu)}, d.coeff * pow(Rational(mu), a + 2) / kp.p);
    }
    return out;
}

VSeries phi_ladder_step(const VSeries& phi) { return {phi.vpow - 1, phi.series.euler(0)}; }

XiSeries xi_series(long alpha, long a, int x_order, const KnotParams& kp) {
    OrbifoldChartData chart = chart_data(kp);
    XiSeries xi;
    xi.alpha = alpha;
    xi.a = a;
    int n = static_cast<int>(kp.p);
    for (long j = 0; j < kp.p; ++j) {
        XiTerm t;
        t.h_index = j;
        t.phase = character(kp.p, alpha, -j) * CyclotomicNumber(n, Rational(kp.p));
        for (int i = 1; i <= 3; ++i) t.weight.exp[i - 1] = 1 - chart.c(i, j);
        t.phi = phi_series(j, a, x_order, kp);
        xi.terms.push_back(std::move(t));
    }
    return xi;
}

VSeries xi_rational(const XiSeries& xi, const KnotParams& kp) {
    OrbifoldChartData chart = chart_data(kp);
    VSeries out;
    bool first = true;
    for (const auto& t : xi.terms) {
        if (!t.phase.is_rational()) throw std::domain_error("xi_rational: irrational character value");
        long vpow = t.weight.v_power() + t.phi.vpow;
        if (first) {
            out.vpow = vpow;
            out.series = PhasedSeries(t.phi.series.layout_ptr());
            first = false;
        } else if (vpow != out.vpow) {
            throw std::logic_error("xi_rational: inhomogeneous v grading");
        }
        out.series += t.phi.series.scaled(t.phase.rational_value() * t.weight.value(chart.w));
    }
    return out;
}

MirrorMap mirror_map(const KnotParams& kp, int q_order) {
    MirrorMap mm;
    const long p = kp.p;
    LayoutPtr L = q_open_layout(p, q_order, {});
    for (long a = 2; a <= p; ++a) {
        PhasedSeries tau(L);
        Rational shift = frac(a - 1, p);
        for_each_bounded_exponent(static_cast<int>(p), q_order, [&](const std::vector<int>& e) {
            long S = 0, total = 0;
            for (long m = 1; m <= p - 1; ++m) S += m * e[static_cast<size_t>(m)];
            for (int x : e) total += x;
            long rest = S - (a - 1);
            if (rest < 0 || rest % p != 0) return;
            long l = rest / p;
            long a1 = e[0];
            Rational c = inv_factorial(a1) * inv_factorial(a1);
            for (long i = 1; i < p; ++i) c *= inv_factorial(e[static_cast<size_t>(i)]);
            for (long m = -a1 - l; m <= -1; ++m) c *= -a1 - l - shift - m;
            for (long m = -total + l + 1; m <= -1; ++m) c *= -total + l + shift - m;
            tau.add_term(e, c);
        });
        mm.tau.push_back(std::move(tau));
    }
    return mm;
}

std::string JCoefficient::to_string() const {
    std::string s = "z^" + std::to_string(z_power) + " * [";
    bool first = true;
    for (const auto& [e, f] : terms) {
        if (!first) s += " + ";
        first = false;
        s += "q^(";
        for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
        s += ")*" + f.to_string("u");
    }
    return s + "]";
}

JCoefficient j_coefficient(long h_index, const KnotParams& kp, int q_order) {
    using P = Poly<Rational>;
    using RF = RationalFunction<Rational>;
    const long p = kp.p;
    JCoefficient J;
    J.h_index = pos_mod(h_index, p);
    J.z_power = J.h_index == 0 ? 0 : -1;
    Rational rp = frac(kp.r, p), sp = frac(kp.s, p);
    for_each_bounded_exponent(static_cast<int>(p), q_order, [&](const std::vector<int>& e) {
        long wnum = 0, total = 0;
        for (long m = 1; m <= p - 1; ++m) wnum += m * e[static_cast<size_t>(m)];
        for (int x : e) total += x;
        if (wnum % p != J.h_index) return;
        Rational w = frac(wnum, p);
        long wfloor = wnum / p;
        long wceil = wfloor + (wnum % p != 0 ? 1 : 0);
        long a1 = e[0];
        P num(Rational(1)), den(Rational(1));
        // The u-linear factors of <D_1, beta>, <D_2, beta> and <D_3, beta>.
        for (long m = -a1 - wfloor; m <= -1; ++m) num *= P(std::vector<Rational>{-(a1 + w + m), rp});
        for (long m = 0; m <= a1 - 1; ++m) den *= P(std::vector<Rational>{Rational(a1 - m), Rational(-kp.k)});
        for (long m = -total + wceil; m <= -1; ++m) num *= P(std::vector<Rational>{w - (total + m), sp});
        Rational c = 1;
        for (int x : e) c *= inv_factorial(x);
        RF f(num.scaled(c), den);
        if (!f.is_zero_function()) J.terms.emplace(e, std::move(f));
    });
    return J;
}

PhasedSeries disk_potential_A(const KnotParams& kp, int q_order, int x_order) {
    const long p = kp.p;
    LayoutPtr L = q_open_layout(p, q_order, {{"X", x_order}});
    PhasedSeries F(L);
    for (long mu = 1; mu <= x_order; ++mu) {
        for_each_bounded_exponent(static_cast<int>(p), q_order, [&](const std::vector<int>& e) {
            long wnum = 0, high = 0;
            for (long m = 1; m <= p - 1; ++m) wnum += m * e[static_cast<size_t>(m)];
            for (long m = 2; m <= p; ++m) high += e[static_cast<size_t>(m - 1)];
            long rest = kp.r * mu - wnum;
            if (rest < 0 || rest % p != 0) return;
            long b = rest / p;
            long a1 = e[0];
            if (a1 > b) return;
            long top = high + b - 1;
            if (top < 0) throw std::logic_error("disk_potential_A: negative product length");
            Rational c = frac(1, mu) * inv_factorial(b - a1);
            if ((kp.k * mu - a1 - 1) % 2 != 0) c = -c;
            for (int x : e) c *= inv_factorial(x);
            for (long j = 1; j <= top; ++j) c *= mu * kp.k - a1 - j;
            std::vector<int> ex = e;
            ex.push_back(static_cast<int>(mu));
            F.add_term(ex, c);
        });
    }
    return F;
}

PhasedSeries disk_potential_J(const KnotParams& kp, int q_order, int x_order, std::vector<long>* v_powers) {
    const long p = kp.p;
    LayoutPtr L = q_open_layout(p, q_order, {{"X", x_order}});
    PhasedSeries F(L);
    std::map<long, JCoefficient> cache;
    for (long mu = 1; mu <= x_order; ++mu) {
        long h = disk_sector(mu, kp);
        auto it = cache.find(h);
        if (it == cache.end()) it = cache.emplace(h, j_coefficient(h, kp, q_order)).first;
        const JCoefficient& J = it->second;
        VMonomial D = disk_factor(mu, kp);
        for (const auto& [e, f] : J.terms) {
            Rational val;
            try {
                val = f(Rational(mu));
            } catch (const std::domain_error&) {
                throw std::domain_error("disk_potential_J: J coefficient has a pole at v/z = " + std::to_string(mu));
            }
            // z^{z_power} at z = v / mu.
            VMonomial jt{val * pow(Rational(mu), -J.z_power), J.z_power};
            VMonomial term = D * jt * VMonomial{frac(1, p), 0};
            if (v_powers) v_powers->push_back(term.vpow);
            if (term.vpow != 0) throw std::logic_error("disk_potential_J: v does not cancel");
            std::vector<int> ex = e;
            ex.push_back(static_cast<int>(mu));
            F.add_term(ex, term.coeff);
        }
    }
    return F;
}

AnnulusQ0 annulus_q0(const KnotParams& kp, int x1_order, int x2_order) {
    const long p = kp.p;
    const int n = static_cast<int>(p);
    OrbifoldChartData chart = chart_data(kp);
    SeriesLayout SL;
    SL.vars = {{"X1", 0, x1_order}, {"X2", 0, x2_order}};
    LayoutPtr L = make_layout(std::move(SL));
    std::vector<XiSeries> xi1, xi2;
    for (long g = 0; g < p; ++g) {
        xi1.push_back(xi_series(g, 0, x1_order, kp));
        xi2.push_back(xi_series(g, 0, x2_order, kp));
    }
    // Sum over characters first: phases pair into rationals.
    std::map<std::pair<long, long>, CyclotomicNumber> phase;
    for (long g = 0; g < p; ++g) {
        for (const auto& t1 : xi1[static_cast<size_t>(g)].terms) {
            for (const auto& t2 : xi2[static_cast<size_t>(g)].terms) {
                auto key = std::make_pair(t1.h_index, t2.h_index);
                auto it = phase.find(key);
                if (it == phase.end()) it = phase.emplace(key, CyclotomicNumber(n, 0)).first;
                it->second += t1.phase * t2.phase;
            }
        }
    }
    Rational norm = 1 / (Rational(p * p) * chart.w[0] * chart.w[1] * chart.w[2]);
    AnnulusQ0 out{PhasedSeries(L), PhasedSeries(L)};
    for (const auto& [key, ph] : phase) {
        if (ph.is_zero()) continue;
        if (!ph.is_rational()) throw std::logic_error("annulus_q0: character sum is not rational");
        const XiTerm& t1 = xi1[0].terms[static_cast<size_t>(key.first)];
        const XiTerm& t2 = xi2[0].terms[static_cast<size_t>(key.second)];
        // v = 1: only the weight values matter.
        Rational c = norm * ph.rational_value() * (t1.weight * t2.weight).value(chart.w);
        t1.phi.series.for_each([&](const PhasedSeries::Exponents& e1, const Rational& c1) {
            t2.phi.series.for_each([&](const PhasedSeries::Exponents& e2, const Rational& c2) {
                out.euler.add_term({e1[0], e2[0]}, c * c1 * c2);
            });
        });
    }
    out.euler.for_each([&](const PhasedSeries::Exponents& e, const Rational& c) {
        out.potential.add_term(e, c / (e[0] + e[1]));
    });
    return out;
}

}  // namespace mirror
