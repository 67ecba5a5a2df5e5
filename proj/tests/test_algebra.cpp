#include "printers.hpp"

#include "mirror/algebra/cyclotomic.hpp"
#include "mirror/algebra/laurent.hpp"
#include "mirror/algebra/newton.hpp"
#include "mirror/algebra/poly.hpp"
#include "mirror/algebra/quad_ext.hpp"
#include "mirror/algebra/radical.hpp"
#include "mirror/algebra/series.hpp"

#include <random>

using namespace mirror;

namespace {

LayoutPtr eta_layout(int order) { return make_layout(SeriesLayout{{{"eta", 0, order}}, {}, -1, {}}); }

LayoutPtr q_eta_layout(int qo, int eo) {
    return make_layout(SeriesLayout{{{"q1", 0, qo}, {"eta", 0, eo}}, {}, -1, {}});
}

Rational binomial(long n, long k) {
    // Generalized binomial coefficient for integer n and k >= 0.
    Rational r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
    CHECK(odd_double_factorial(5) == 15);
    CHECK(odd_double_factorial(-1) == 1);
    CHECK(odd_double_factorial(-3) == -1);
    CHECK(factorial(6) == 720);
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("series: exp and log are inverse") {
    auto L = q_eta_layout(8, 0);
    auto q1 = PhasedSeries::variable(L, 0);
    auto one = PhasedSeries::constant(L, 1);
    CHECK(((one + q1).log().exp()) == one + q1);
}

TEST_CASE("series: product and derivative") {
    auto L = eta_layout(6);
    auto eta = PhasedSeries::variable(L, 0);
    auto one = PhasedSeries::constant(L, 1);
    CHECK((one + eta) * (one - eta) == one - eta * eta);
    PhasedSeries s(L), expect(L);
    for (int m = 1; m <= 6; ++m) {
        s.add_term({m}, Rational(1, m));
        expect.add_term({m - 1}, 1);
    }
    CHECK(s.derive(0) == expect);
    CHECK(s.derive(0).integrate(0) == s);
}

TEST_CASE("series: inverse, errors, truncation to common order") {
    auto L = eta_layout(5);
    auto eta = PhasedSeries::variable(L, 0);
    auto one = PhasedSeries::constant(L, 1);
    auto f = one - eta;
    CHECK(f * f.inverse() == one);
    CHECK_THROWS(eta.inverse());
    CHECK_THROWS(eta.log());
    CHECK_THROWS(one.exp());
    auto L3 = eta_layout(3);
    auto g = PhasedSeries::constant(L3, 1) + PhasedSeries::variable(L3, 0);
    auto prod = f * g;
    CHECK(prod.layout().vars[0].max_exp == 3);
    auto other = make_layout(SeriesLayout{{{"x", 0, 5}}, {}, -1, {}});
    CHECK_THROWS(f + PhasedSeries::variable(other, 0));
}

TEST_CASE("series: total degree cap") {
    auto L = make_layout(SeriesLayout{{{"q1", 0, 5}, {"q2", 0, 5}, {"eta", 0, 5}}, {0, 1}, 2, {}});
    auto q1 = PhasedSeries::variable(L, 0);
    auto q2 = PhasedSeries::variable(L, 1);
    auto s = (q1 + q2).pow(3);
    CHECK(s.is_zero());
    CHECK((q1 * q2).coeff({1, 1, 0}) == 1);
}

TEST_CASE("series: h projector and dephasing") {
    auto L = make_layout(SeriesLayout{{{"q1", 0, 2}, {"eta", 0, 6}}, {}, -1, PhaseRule{3, 2, {1}, 0}});
    PhasedSeries f(L);
    f.add_term({0, 1}, 1);
    f.add_term({0, 2}, 1);
    f.add_term({0, 3}, 1);
    f.add_term({1, 4}, 5);
    auto h = f.h_project(2, {1});
    CHECK(h.size() == 2);
    CHECK(h.h_project(2, {1}) == h);
    CHECK_THROWS(f.dephase());
    auto d = h.dephase({"X"});
    // eta^2 -> zeta^{3*2} = (-1)^3; q1 eta^4 -> (-1) * zeta^{12} = -1.
    CHECK(d.coeff({0, 1}) == -1);
    CHECK(d.coeff({1, 2}) == -5);
}

TEST_CASE("series: json round trip and tsv header") {
    auto L = make_layout(SeriesLayout{{{"q1", 0, 2}, {"eta", 0, 3}}, {}, -1, PhaseRule{2, 1, {1}, 0}});
    PhasedSeries f(L);
    f.add_term({1, 2}, Rational(-7, 3));
    f.add_term({0, 1}, parse_rational("123456789012345678901234567890/7"));
    CHECK(PhasedSeries::from_json(f.to_json()) == f);
    CHECK(f.to_tsv().rfind("exp_q1\texp_eta\tnum\tden\n", 0) == 0);
}

TEST_CASE("newton: Catalan numbers against fixed-point iteration") {
    const int N = 10;
    auto L = eta_layout(N);
    auto eta = PhasedSeries::variable(L, 0);
    auto one = PhasedSeries::constant(L, 1);
    // F = W - 1 - eta W^2.
    auto W = newton_implicit_solve({-one, one, -eta}, one);
    PhasedSeries oracle = one;
    for (int i = 0; i <= N; ++i) oracle = one + eta * oracle * oracle;
    CHECK(W == oracle);
    CHECK(W.coeff({3}) == 5);
    CHECK(evaluate_polynomial({-one, one, -eta}, W).is_zero());
}

TEST_CASE("newton: linear and constant equations") {
    auto L = eta_layout(5);
    auto eta = PhasedSeries::variable(L, 0);
    auto one = PhasedSeries::constant(L, 1);
    auto W = newton_implicit_solve({one + eta, one}, -one);
    CHECK(W == -one - eta);
    auto c = PhasedSeries::constant(L, Rational(3, 4));
    CHECK(newton_implicit_solve({-c, one}, c) == c);
    CHECK_THROWS(newton_implicit_solve({-c, one}, one));
    CHECK_THROWS(newton_implicit_solve({one, one.scaled(-2), one}, one));
}

TEST_CASE("residues") {
    using RF = RationalFunction<Rational>;
    using P = Poly<Rational>;
    RF inv_t(P(Rational(1)), P::x());
    CHECK(inv_t.residue(0) == 1);
    Rational a(2, 3), b(-5);
    RF f(P(Rational(1)), P::linear_root(a) * P::linear_root(b));
    CHECK(f.residue(a) == 1 / (a - b));
    RF g(P(Rational(1)), P::x() * P::x() * (P(Rational(1)) - P::x()));
    CHECK(g.residue(0) == 1);
    CHECK(f.residue(7) == 0);
}

TEST_CASE("residue of exact differentials vanishes on random instances") {
    using RF = RationalFunction<Rational>;
    using P = Poly<Rational>;
    std::mt19937 rng(20261017);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        Rational a = frac(coef(rng), 1 + (trial % 4));
        std::vector<Rational> nc;
        for (int i = 0; i < 4; ++i) nc.push_back(coef(rng));
        int m = 1 + trial % 4;
        P den(Rational(1));
        for (int i = 0; i < m; ++i) den *= P::linear_root(a);
        RF g(P(nc), den);
        CHECK(g.derivative().residue(a) == 0);
        // Linearity.
        RF h(P(Rational(coef(rng))), P::linear_root(a));
        CHECK((g + h).residue(a) == g.residue(a) + h.residue(a));
    }
}

TEST_CASE("local series inversion") {
    using LS = LaurentSeries<Rational>;
    const int N = 9;
    LS s = LS(1, {Rational(1)}, N + 1);
    CHECK(s.reversion() == s);
    LS s2 = LS(1, {Rational(1), Rational(1)}, N + 1);
    LS inv = s2.reversion();
    for (int n = 1; n <= N; ++n) {
        // Lagrange: [s^n] zeta = (1/n) [z^{n-1}] (1+z)^{-n}.
        CHECK(inv.coeff(n) == binomial(-n, n - 1) / n);
    }
    CHECK(s2.compose(inv) == LS(1, {Rational(1)}, N + 1));
    LS s3 = LS(1, {Rational(2)}, N + 1);
    CHECK(s3.reversion() == LS(1, {Rational(1, 2)}, N + 1));
    CHECK_THROWS(LS(2, {Rational(1)}, N).reversion());
}

TEST_CASE("laurent arithmetic and precision") {
    using LS = LaurentSeries<Rational>;
    LS f(0, {Rational(1), Rational(-1)}, 6);
    LS g = f.inverse();
    CHECK(g.precision() == 6);
    for (int i = 0; i < 6; ++i) CHECK(g.coeff(i) == 1);
    LS p = LS(-2, {Rational(1), Rational(0), Rational(3)}, 4);
    CHECK((p * g).precision() == 4);
    LS sq = LS(0, {Rational(1), Rational(2), Rational(1)}, 8).sqrt_one_plus();
    CHECK(sq == LS(0, {Rational(1), Rational(1)}, 8));
    CHECK_THROWS(LS(-1, {Rational(1)}).integrate());
}

TEST_CASE("quadratic extension: norms and conjugation on random elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-20, 20);
    Rational D = 13;
    for (int i = 0; i < 25; ++i) {
        QuadExt x(frac(coef(rng), 3), frac(coef(rng), 5), D);
        QuadExt y(frac(coef(rng), 2), frac(coef(rng), 7), D);
        CHECK((x * x.conj()).is_rational());
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt(1));
    }
    CHECK(QuadExt::sqrt_of(Rational(9, 4)) == QuadExt(Rational(3, 2)));
    CHECK_THROWS(QuadExt::sqrt_of(2) + QuadExt::sqrt_of(3));
}

TEST_CASE("radical tower arithmetic") {
    auto ctx = std::make_shared<RadicalContext>();
    ctx->names = {"l", "s"};
    ctx->squares = {QuadExt(Rational(1), Rational(1), Rational(5)), QuadExt(-2)};
    auto l = RadicalNumber::generator(ctx, 0);
    auto s = RadicalNumber::generator(ctx, 1);
    CHECK((s * s) == RadicalNumber(-2));
    CHECK((l * l).base_value() == QuadExt(Rational(1), Rational(1), Rational(5)));
    RadicalNumber x = RadicalNumber(3) + l + s * l + RadicalNumber(QuadExt(0, 1, 5)) * s;
    CHECK(x * x.inverse() == RadicalNumber(1));
    CHECK_THROWS(l.base_value());
}

TEST_CASE("cyclotomic numbers") {
    for (int n : {1, 2, 3, 4, 5, 6}) {
        CyclotomicNumber sum(n, 0);
        for (int h = 0; h < n; ++h) sum += CyclotomicNumber::root_power(n, h);
        CHECK(sum == CyclotomicNumber(n, n == 1 ? 1 : 0));
        CHECK(CyclotomicNumber::root_power(n, 1) * CyclotomicNumber::root_power(n, n - 1) == CyclotomicNumber(n, 1));
    }
    CHECK(CyclotomicNumber::root_power(4, 2) == CyclotomicNumber(4, -1));
}
