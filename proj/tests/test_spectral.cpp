#include "printers.hpp"

#include "mirror/amodel/rmatrix.hpp"
#include "mirror/curve/mirror_p1.hpp"
#include "mirror/curve/rcheck.hpp"

using namespace mirror;

namespace {

bool matrix_is_identity(const FieldSeriesMatrix& m) {
    for (size_t a = 0; a < m.size(); ++a)
        for (size_t b = 0; b < m.size(); ++b)
            for (int e = 0; e < m.order; ++e)
                if (m.at(a, b, e) != Field(e == 0 && a == b ? 1 : 0)) return false;
    return true;
}

}  // namespace

TEST_CASE("Airy model: theta forms, Bergman coefficients, R-check") {
    auto c = airy_curve(16);
    CHECK(c.size() == 1);
    CHECK(c.h1(0) == Field(1));
    // theta^0 = -dt/t^2 globally.
    auto th0 = c.theta_global(0, 0);
    CHECK(th0.numerator() == FieldPoly(Field(-1)));
    CHECK(th0.denominator() == FieldPoly(std::vector<Field>{Field(0), Field(0), Field(1)}));
    // theta^1 principal part -3/(2 zeta^4).
    auto th1 = c.theta_local(0, 1, 0);
    CHECK(th1.valuation() == -4);
    CHECK(th1.coeff(-4) == Field(frac(-3, 2)));
    for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 6; ++l) CHECK(c.bergman_coeff(0, 0, k, l) == Field(0));
    auto r = r_check_matrix(c, 5);
    CHECK(matrix_is_identity(r));
    auto b1 = b_check_from_bergman(c, 1);
    auto b2 = b_check_from_r(r, 1);
    CHECK(b1 == b2);
    CHECK(b1[0][0][0][0] == Field(0));
}

TEST_CASE("p=1 curve ramification data") {
    auto kp = validate_knot(1, 1, 1);
    auto mc = mirror_curve_p1(kp, frac(1, 7));
    auto pts = ramification_points(mc);
    REQUIRE(pts.size() == 2);
    // V^2 + 2V + q = 0.
    for (const auto& v : pts) CHECK(v * v + QuadExt(2) * v + QuadExt(frac(1, 7)) == QuadExt(0));
    CHECK(pts[0] == pts[1].conj());
    CHECK(pts[0] + pts[1] == QuadExt(-2));
    CHECK_THROWS_AS(mirror_curve_p1(kp, Rational(1)), CurveError);
    CHECK_THROWS_AS(mirror_curve_p1(kp, Rational(0)), CurveError);
    CHECK_THROWS_AS(mirror_curve_p1(validate_knot(2, 1, 1), frac(1, 7)), CurveError);
}

TEST_CASE("p=1 curve: local expansions, R-check unitarity and B-check routes") {
    for (auto [r, s, qn, qd] : {std::tuple{1L, 1L, 1L, 7L}, {2L, 1L, 1L, 5L}, {1L, 3L, -2L, 9L}}) {
        auto kp = validate_knot(1, r, s);
        auto c = make_spectral_curve(mirror_curve_p1(kp, frac(qn, qd)), 16);
        for (size_t a = 0; a < 2; ++a) {
            // x(t(zeta)) - x_sigma = zeta^2: check d x / d zeta = 2 zeta.
            const auto& d = c.point(a);
            auto xs = c.dx().laurent_at(Field(d.t), 18).compose(d.u_of_zeta) * d.dt_dzeta;
            CHECK(xs.truncate(12) == LocalSeries(1, {Field(2)}, 12));
            for (int m = 0; m < 6; ++m) {
                auto b = c.beta_local(a, m, a);
                CHECK(b.valuation() == -m - 2);
                CHECK(b.coeff(-m - 2) == Field(m + 1));
                for (int e = -m - 1; e < 0; ++e) CHECK(b.coeff(e) == Field(0));
            }
            for (size_t b = 0; b < 2; ++b)
                for (int k = 0; k < 5; ++k)
                    for (int l = 0; l < 5; ++l) CHECK(c.bergman_coeff(a, b, k, l) == c.bergman_coeff(b, a, l, k));
        }
        auto R = r_check_matrix(c, 7);
        CHECK(matrix_is_identity(r_check_unitarity(R)));
        auto b1 = b_check_from_bergman(c, 2);
        auto b2 = b_check_from_r(R, 2);
        CHECK(b1 == b2);
    }
}

TEST_CASE("theta forms expand through R-check and theta-hat forms with the thimble index on R") {
    auto kp = validate_knot(1, 1, 1);
    auto c = make_spectral_curve(mirror_curve_p1(kp, frac(1, 7)), 14);
    auto R = r_check_matrix(c, 5);
    CHECK(check_theta_hat(c, R, 4, false) == "");
    CHECK(check_theta_hat(c, R, 4, true) != "");
    auto a = airy_curve(12);
    CHECK(check_theta_hat(a, r_check_matrix(a, 4), 4, false) == "");
}
