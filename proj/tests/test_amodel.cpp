#include "printers.hpp"

#include "mirror/amodel/chart.hpp"
#include "mirror/amodel/disk.hpp"
#include "mirror/amodel/rmatrix.hpp"
#include "mirror/algebra/laurent.hpp"
#include "mirror/curve/vseries.hpp"

#include <tuple>

using namespace mirror;

namespace {

const std::tuple<long, long, long> kTuples[] = {{1, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 1, 2}, {5, 2, 3}};

}  // namespace

TEST_CASE("disk factor values") {
    auto u = validate_knot(1, 1, 1);
    CHECK(disk_factor(1, u) == VMonomial{-1, 0});
    CHECK(disk_factor(2, u) == VMonomial{frac(-3, 4), 0});
    auto t = validate_knot(3, 1, 2);
    CHECK(disk_factor(1, t) == VMonomial{3, 1});
    CHECK_THROWS(disk_factor(0, u));
}

TEST_CASE("Phi series: leading term and ladder") {
    auto u = validate_knot(1, 1, 1);
    auto phi = phi_series(0, 0, 4, u);
    CHECK(phi.vpow == -2);
    CHECK(phi.series.coeff({1}) == -1);
    for (auto [p, r, s] : kTuples) {
        auto kp = validate_knot(p, r, s);
        for (long h = 0; h < p; ++h)
            for (long a = -2; a <= 2; ++a) {
                auto step = phi_ladder_step(phi_series(h, a, 6, kp));
                auto next = phi_series(h, a + 1, 6, kp);
                CHECK(step.vpow == next.vpow);
                CHECK(step.series == next.series);
            }
    }
}

TEST_CASE("xi series for p = 1 reduces to w1 w2 w3 v^3 Phi") {
    auto kp = validate_knot(1, 2, 1);
    auto xi = xi_rational(xi_series(0, 0, 5, kp), kp);
    auto phi = phi_series(0, 0, 5, kp);
    auto w = chart_data(kp).w;
    CHECK(xi.vpow == phi.vpow + 3);
    CHECK(xi.series == phi.series.scaled(w[0] * w[1] * w[2]));
}

TEST_CASE("mirror map leading terms") {
    CHECK(mirror_map(validate_knot(1, 1, 1), 3).tau.empty());
    for (auto [p, r, s] : kTuples) {
        auto kp = validate_knot(p, r, s);
        auto mm = mirror_map(kp, 3);
        CHECK(mm.tau1 == "log(q1)");
        REQUIRE(mm.tau.size() == static_cast<size_t>(p - 1));
        for (long a = 2; a <= p; ++a) {
            const auto& tau = mm.tau[static_cast<size_t>(a - 2)];
            CHECK(tau.constant_term() == 0);
            tau.for_each([&](const PhasedSeries::Exponents& e, const Rational& c) {
                int total = 0;
                for (int x : e) total += x;
                if (total == 1) {
                    CHECK(e[static_cast<size_t>(a - 1)] == 1);
                    CHECK(c == 1);
                }
            });
        }
    }
}

TEST_CASE("J coefficient for p = 1") {
    auto kp = validate_knot(1, 2, 1);
    auto J = j_coefficient(0, kp, 2);
    CHECK(J.z_power == 0);
    // beta = 0 contributes 1.
    CHECK(J.terms.at({0}) == RationalFunction<Rational>(Rational(1)));
    // a1 = 1: r s u^2 / (1 - k u).
    using P = Poly<Rational>;
    RationalFunction<Rational> expect(P(std::vector<Rational>{0, 0, Rational(kp.r * kp.s)}),
                                      P(std::vector<Rational>{1, Rational(-kp.k)}));
    CHECK(J.terms.at({1}) == expect);
}

TEST_CASE("closed-form disk potential at q = 0") {
    auto kp = validate_knot(1, 1, 1);
    auto F = disk_potential_A(kp, 0, 5);
    for (long mu = 1; mu <= 5; ++mu) {
        Rational expect = -Rational(factorial(2 * mu - 1)) / (Rational(mu) * Rational(factorial(mu)) * Rational(factorial(mu)));
        CHECK(F.coeff({0, static_cast<int>(mu)}) == expect);
    }
    auto G = disk_potential_A(validate_knot(3, 1, 2), 3, 3);
    CHECK(G.coeff({0, 0, 0, 1}) == 0);
    CHECK(G.coeff({0, 1, 0, 1}) != 0);
}

TEST_CASE("disk potential: closed form, J route and curve side agree") {
    for (auto [p, r, s] : kTuples) {
        auto kp = validate_knot(p, r, s);
        INFO(kp.to_string());
        auto A = disk_potential_A(kp, 3, 3);
        std::vector<long> vp;
        auto J = disk_potential_J(kp, 3, 3, &vp);
        CHECK(A == J);
        for (long v : vp) CHECK(v == 0);
        auto phi = phi_newton(kp, eta_layout(kp, 3, static_cast<int>(3 * r)));
        auto B = disk_potential_B(kp, phi);
        CHECK(A == B);
    }
}

TEST_CASE("Bernoulli polynomials") {
    CHECK(bernoulli_polynomial(0, frac(3, 7)) == 1);
    CHECK(bernoulli_polynomial(1, frac(1, 2)) == 0);
    CHECK(bernoulli_polynomial(2, 0) == frac(1, 6));
    // Oracle: t e^{tx} / (e^t - 1) expanded directly.
    using LS = LaurentSeries<Rational>;
    const int N = 8;
    for (Rational x : {Rational(0), frac(1, 3), frac(-5, 2)}) {
        std::vector<Rational> ex, den;
        for (int m = 0; m < N; ++m) {
            ex.push_back(pow(x, m) * inv_factorial(m));
            den.push_back(inv_factorial(m + 1));
        }
        LS gen = LS(0, ex, N) * LS(0, den, N).inverse(N);
        for (int m = 0; m < N; ++m) CHECK(bernoulli_polynomial(m, x) == gen.coeff(m) * Rational(factorial(m)));
    }
}

TEST_CASE("R-matrix limit: identity at z^0, unitarity, p = 1 entry") {
    for (long p : {1L, 2L, 3L, 5L}) {
        long r = 1, s = p == 1 ? 1 : p - 1;
        auto kp = validate_knot(p, r, s);
        auto R = r_matrix_limit(kp, 6);
        for (size_t a = 0; a < R.size(); ++a)
            for (size_t b = 0; b < R.size(); ++b)
                CHECK(R.entry[a][b][0] == CyclotomicNumber(static_cast<int>(p), a == b ? 1 : 0));
        CHECK(transpose_reflect_product(R) == identity_series_matrix(p, 6));
    }
    auto kp = validate_knot(1, 1, 1);
    auto R = r_matrix_limit(kp, 4);
    // log R = sum_m (-1)^m/(m(m+1)) B_{m+1}(0) sum_i (z/w_i)^m; w = (1, -2, 1).
    // m = 1: -(1/2)(1/6)(1 - 1/2 + 1) = -1/8.
    CHECK(R.entry[0][0][1] == CyclotomicNumber(1, frac(-1, 8)));
}

TEST_CASE("Chen-Ruan ring: pairing, product exponents, canonical idempotents") {
    for (auto [p, r, s] : kTuples) {
        auto chart = chart_data(validate_knot(p, r, s));
        CHECK(chart.w[0] + chart.w[1] + chart.w[2] == 0);
        auto id = cr_ring_data(0, 0, chart);
        CHECK(id.pairing_nonzero);
        CHECK(id.pairing.coeff == frac(1, p));
        for (const auto& e : id.pairing.exp) CHECK(e == -1);
        for (long j = 0; j < p; ++j) {
            Rational s13 = chart.c(1, j) + chart.c(3, j);
            CHECK((s13 == 0 || s13 == 1));
            auto st = cr_ring_data(j, chart.inverse(j), chart);
            CHECK(st.pairing_nonzero);
            for (const auto& e : st.product_exp) CHECK((e == 0 || e == 1));
            for (long g = 0; g < p; ++g)
                for (long gp = 0; gp < p; ++gp) {
                    auto prod = canonical_basis_product(g, gp, chart);
                    auto expect = canonical_basis_vector(g, chart);
                    for (long i = 0; i < p; ++i) {
                        auto want = g == gp ? expect[static_cast<size_t>(i)] : CyclotomicNumber(static_cast<int>(p), 0);
                        CHECK(prod[static_cast<size_t>(i)] == want);
                    }
                }
        }
    }
}

TEST_CASE("annulus at q = 0: symmetry and vanishing slices") {
    auto kp = validate_knot(1, 1, 1);
    auto A = annulus_q0(kp, 3, 3);
    A.euler.for_each([&](const PhasedSeries::Exponents& e, const Rational& c) {
        CHECK(e[0] > 0);
        CHECK(e[1] > 0);
        CHECK(A.euler.coeff({e[1], e[0]}) == c);
    });
    CHECK(!A.euler.is_zero());
    auto B = annulus_q0(validate_knot(3, 1, 2), 3, 3);
    CHECK(!B.euler.is_zero());
}
