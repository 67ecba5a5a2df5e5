#include "printers.hpp"

#include "mirror/curve/knot.hpp"
#include "mirror/curve/vseries.hpp"

using namespace mirror;

TEST_CASE("knot validation and framing completion") {
    auto a = validate_knot(1, 2, 1);
    CHECK(a.k == 3);
    CHECK(a.gamma == 1);
    CHECK(a.delta == -1);
    auto b = validate_knot(3, 1, 2);
    CHECK(b.k == 1);
    CHECK(b.gamma == 0);
    CHECK(b.delta == 1);
    CHECK_THROWS_WITH_AS(validate_knot(2, 1, 2), "r+s not divisible by p", KnotError);
    CHECK_THROWS_AS(validate_knot(2, 2, 2), KnotError);
    CHECK_THROWS_AS(validate_knot(0, 1, 1), KnotError);
    for (auto [p, r, s] : {std::tuple{1L, 1L, 1L}, {2L, 3L, 1L}, {5L, 2L, 3L}, {1L, 3L, 2L}}) {
        auto kp = validate_knot(p, r, s);
        CHECK(kp.r * kp.delta + kp.k * kp.gamma == 1);
    }
}

TEST_CASE("v series: closed form equals Newton solve") {
    for (auto [p, r, s] : {std::tuple{1L, 1L, 1L}, {1L, 2L, 1L}, {2L, 3L, 1L}, {3L, 1L, 2L}, {5L, 2L, 3L}}) {
        auto kp = validate_knot(p, r, s);
        auto L = eta_layout(kp, 3, static_cast<int>(3 * r));
        auto closed = phi_closed_form(kp, L);
        auto newton = phi_newton(kp, L);
        INFO(kp.to_string());
        CHECK(closed == newton);
        CHECK(framed_curve_residual(kp, closed).is_zero());
        CHECK(solve_v_series(kp, L) == -newton);
    }
}

TEST_CASE("v series: leading terms for the unknot framing") {
    auto kp = validate_knot(1, 1, 1);
    auto L = eta_layout(kp, 2, 3);
    auto phi = phi_newton(kp, L);
    // eta e^{2 phi} + 1 - e^{phi} + q1 eta e^{phi} = 0 at first order: phi_1 = 1 + q1.
    CHECK(phi.coeff({0, 1}) == 1);
    CHECK(phi.coeff({1, 1}) == 1);
    CHECK(phi.coeff({2, 1}) == 0);
    auto w = w01_series(kp, phi);
    CHECK(w.coeff({0, 2}) == phi.coeff({0, 2}) / 2);
}
