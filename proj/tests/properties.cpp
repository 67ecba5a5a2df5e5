#include "properties.hpp"

#include "mirror/amodel/chart.hpp"
#include "mirror/amodel/disk.hpp"
#include "mirror/curve/mirror_p1.hpp"
#include "mirror/curve/vseries.hpp"
#include "mirror/recursion/dvv.hpp"
#include "mirror/recursion/eo.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>

namespace mirror {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

KnotParams random_knot(Rng& rng, const std::vector<long>& ps, long max_rs) {
    for (;;) {
        long p = ps[static_cast<size_t>(uniform(rng, 0, static_cast<long>(ps.size()) - 1))];
        try {
            return validate_knot(p, uniform(rng, 1, max_rs), uniform(rng, 1, max_rs));
        } catch (const KnotError&) {
        }
    }
}

// Each instance returns an empty string on success or a description of the failure.
SuiteResult run_suite(const std::string& name, int instances, Rng& rng, const std::function<std::string(Rng&)>& one) {
    SuiteResult res{name, instances, 0, ""};
    for (int i = 0; i < instances; ++i) {
        std::string why;
        try {
            why = one(rng);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (!why.empty()) {
            ++res.failures;
            if (res.first_failure.empty()) res.first_failure = "instance " + std::to_string(i) + ": " + why;
        }
    }
    return res;
}

PhasedSeries random_series(Rng& rng, const LayoutPtr& layout, int count) {
    PhasedSeries f(layout);
    const auto& vars = layout->vars;
    for (int i = 0; i < count; ++i) {
        PhasedSeries::Exponents e;
        for (const auto& v : vars) e.push_back(static_cast<int>(uniform(rng, v.min_exp, v.max_exp)));
        f.add_term(e, frac(uniform(rng, -9, 9), uniform(rng, 1, 6)));
    }
    return f;
}

std::string h_projector(Rng& rng) {
    KnotParams kp = random_knot(rng, {1, 2, 3}, 4);
    int eta_order = static_cast<int>(uniform(rng, 1, 4) * kp.r);
    LayoutPtr L = eta_layout(kp, static_cast<int>(uniform(rng, 1, 3)), eta_order);
    PhasedSeries f = random_series(rng, L, 12), g = random_series(rng, L, 12);
    int eta = open_index(kp);
    auto h = [&](const PhasedSeries& x) { return x.h_project(kp.r, {eta}); };
    if (h(h(f)) != h(f)) return "not idempotent for " + kp.to_string();
    if (h(f + g) != h(f) + h(g)) return "not additive for " + kp.to_string();
    if (h(f.euler(eta)) != h(f).euler(eta)) return "does not commute with eta d/deta for " + kp.to_string();
    bool divisible = true;
    h(f).for_each([&](const PhasedSeries::Exponents& e, const Rational&) {
        if (e[static_cast<size_t>(eta)] % kp.r != 0) divisible = false;
    });
    if (!divisible) return "kept an exponent not divisible by r";
    return "";
}

Rational random_q(Rng& rng) { return frac(uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 2, 13)); }

std::string omega_symmetry_residue(Rng& rng) {
    static const std::vector<std::pair<int, int>> kinds{{0, 3}, {1, 1}, {0, 4}, {1, 2}};
    KnotParams kp = random_knot(rng, {1}, 3);
    auto [g, n] = kinds[static_cast<size_t>(uniform(rng, 0, 3))];
    std::optional<MirrorCurveP1> mc;
    while (!mc) {
        try {
            mc = mirror_curve_p1(kp, random_q(rng));
        } catch (const CurveError&) {
        }
    }
    GenusZeroCurve curve = make_spectral_curve(*mc, local_order_for(1, 2, 0));
    std::string where = kp.to_string() + " q=" + to_string(mc->q) + " (g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")";
    EORecursion eo(curve);
    Multidifferential w = eo.omega(g, n);
    if (w.terms.empty()) return "empty omega at " + where;
    if (!w.is_symmetric()) return "omega not symmetric at " + where;
    // Residue in the first argument at each ramification point, per remaining index.
    for (size_t at = 0; at < curve.size(); ++at) {
        std::map<FormIndex, Field> res;
        for (const auto& [idx, c] : w.terms) {
            Field r = curve.theta_local(static_cast<size_t>(idx[0].first), idx[0].second, at).coeff(-1);
            res[FormIndex(idx.begin() + 1, idx.end())] += c * r;
        }
        for (const auto& [rest, v] : res)
            if (!is_zero(v)) return "nonzero residue at " + where;
    }
    // Each theta form has its only pole at its own ramification point.
    for (const auto& [idx, c] : w.terms)
        for (auto [s, d] : idx) {
            FieldPoly den = curve.theta_global(static_cast<size_t>(s), d).denominator();
            FieldPoly pole(Field(1));
            for (int i = 0; i < den.degree(); ++i)
                pole = pole * FieldPoly::linear_root(Field(curve.point(static_cast<size_t>(s)).t));
            if (!(den * FieldPoly(pole.leading()) - pole * FieldPoly(den.leading())).is_zero_poly())
                return "theta form with a pole off its point at " + where;
        }
    return "";
}

std::string phi_ladder(Rng& rng) {
    KnotParams kp = random_knot(rng, {1, 2, 3, 5}, 5);
    long h = uniform(rng, 0, kp.p - 1);
    long a = uniform(rng, 0, 4);
    int x_order = static_cast<int>(uniform(rng, 1, 6));
    VSeries lhs = phi_ladder_step(phi_series(h, a, x_order, kp));
    VSeries rhs = phi_series(h, a + 1, x_order, kp);
    if (lhs.vpow != rhs.vpow || lhs.series != rhs.series)
        return "ladder fails for " + kp.to_string() + " h=" + std::to_string(h) + " a=" + std::to_string(a);
    return "";
}

std::string mirror_map_leading(Rng& rng) {
    KnotParams kp = random_knot(rng, {2, 3, 4, 5}, 5);
    int q_order = static_cast<int>(uniform(rng, 1, 3));
    MirrorMap mm = mirror_map(kp, q_order);
    if (mm.tau.size() != static_cast<size_t>(kp.p - 1)) return "wrong number of tau series";
    for (long a = 2; a <= kp.p; ++a) {
        const PhasedSeries& tau = mm.tau[static_cast<size_t>(a - 2)];
        std::string bad;
        tau.for_each([&](const PhasedSeries::Exponents& e, const Rational& c) {
            int deg = 0;
            for (int x : e) deg += x;
            bool is_qa = deg == 1 && e[static_cast<size_t>(q_index(static_cast<int>(a)))] == 1;
            if (is_qa && c != 1) bad = "coefficient of q_a is " + to_string(c);
            if (!is_qa && deg < 2) bad = "low-degree term " + tau.monomial_string(e);
        });
        PhasedSeries::Exponents ea(static_cast<size_t>(kp.p), 0);
        ea[static_cast<size_t>(q_index(static_cast<int>(a)))] = 1;
        if (tau.coeff(ea) != 1) bad = "missing q_a";
        if (!bad.empty()) return bad + " in tau_" + std::to_string(a) + " for " + kp.to_string();
    }
    return "";
}

std::string string_equation(Rng& rng) {
    for (;;) {
        int g = static_cast<int>(uniform(rng, 0, 3));
        int n = static_cast<int>(uniform(rng, 1, 4));
        if (2 * g - 2 + n <= 0) continue;
        // <tau_0 tau_k1 ... tau_kn>_g needs sum k = 3g - 2 + n.
        std::vector<int> k(static_cast<size_t>(n), 0);
        for (int left = 3 * g - 2 + n; left > 0; --left) ++k[static_cast<size_t>(uniform(rng, 0, n - 1))];
        std::vector<int> with0 = k;
        with0.insert(with0.begin(), 0);
        Rational lhs = dvv_intersection(g, with0);
        Rational rhs = 0;
        for (size_t j = 0; j < k.size(); ++j) {
            if (k[j] == 0) continue;
            auto kk = k;
            --kk[j];
            rhs += dvv_intersection(g, kk);
        }
        if (lhs != rhs) return "string equation fails at g=" + std::to_string(g) + ": " + to_string(lhs) + " vs " + to_string(rhs);
        // Every psi-class intersection number of the right dimension is positive.
        if (lhs <= 0) return "non-positive table entry at g=" + std::to_string(g);
        return "";
    }
}

std::string character_orthogonality(Rng& rng) {
    long p = uniform(rng, 1, 12);
    long alpha = uniform(rng, 0, p - 1), beta = uniform(rng, 0, p - 1);
    int ip = static_cast<int>(p);
    CyclotomicNumber sum(ip, 0);
    for (long j = 0; j < p; ++j) sum += character(p, alpha, j) * character(p, beta, pos_mod(-j, p));
    CyclotomicNumber want(ip, alpha == beta ? p : 0);
    if (sum != want) return "row orthogonality fails for p=" + std::to_string(p);
    if (character_inner_product(p, alpha, beta) != CyclotomicNumber(ip, alpha == beta ? 1 : 0))
        return "inner product mismatch for p=" + std::to_string(p);
    long j1 = uniform(rng, 0, p - 1), j2 = uniform(rng, 0, p - 1);
    CyclotomicNumber col(ip, 0);
    for (long a = 0; a < p; ++a) col += character(p, a, j1) * character(p, a, pos_mod(-j2, p));
    if (col != CyclotomicNumber(ip, j1 == j2 ? p : 0)) return "column orthogonality fails for p=" + std::to_string(p);
    return "";
}

std::string disk_v_cancellation(Rng& rng) {
    KnotParams kp = random_knot(rng, {1, 2, 3, 5}, 4);
    int q_order = static_cast<int>(uniform(rng, 0, 2));
    int x_order = static_cast<int>(uniform(rng, 1, 3));
    std::vector<long> vp;
    PhasedSeries J = disk_potential_J(kp, q_order, x_order, &vp);
    for (long v : vp)
        if (v != 0) return "v power " + std::to_string(v) + " survives for " + kp.to_string();
    if (J != disk_potential_A(kp, q_order, x_order)) return "J route differs from the closed form for " + kp.to_string();
    return "";
}

}  // namespace

std::vector<SuiteResult> run_property_suites(std::uint64_t seed, int instances) {
    Rng rng(seed);
    std::vector<SuiteResult> out;
    out.push_back(run_suite("h projector idempotence and commutation", instances, rng, h_projector));
    out.push_back(run_suite("omega symmetry and residue vanishing", instances, rng, omega_symmetry_residue));
    out.push_back(run_suite("Phi ladder", instances, rng, phi_ladder));
    out.push_back(run_suite("mirror map leading term", instances, rng, mirror_map_leading));
    out.push_back(run_suite("string equation on the DVV table", instances, rng, string_equation));
    out.push_back(run_suite("character orthogonality", instances, rng, character_orthogonality));
    out.push_back(run_suite("disk potential v cancellation", instances, rng, disk_v_cancellation));
    return out;
}

}  // namespace mirror
