#include "printers.hpp"

#include "mirror/amodel/disk.hpp"
#include "mirror/curve/mirror_p1.hpp"
#include "mirror/recursion/eo.hpp"
#include "mirror/recursion/wgn.hpp"

using namespace mirror;

namespace {

const std::vector<std::pair<long, long>> kFramings{{1, 1}, {2, 1}, {1, 2}};

bool swap_symmetric(const PhasedSeries& f) {
    bool ok = true;
    f.for_each([&](const PhasedSeries::Exponents& e, const Rational& c) {
        if (f.coeff({e[1], e[0]}) != c) ok = false;
    });
    return ok;
}

}  // namespace

TEST_CASE("framed branch V(eta) + 1 starts at eta^1") {
    for (auto [r, s] : kFramings) {
        auto kp = validate_knot(1, r, s);
        auto w = framed_w_series(kp, frac(1, 7), 6);
        CHECK(w.coeff(0) == 0);
        CHECK(w.coeff(1) != 0);
    }
}

TEST_CASE("annulus potential: symmetric, no one-variable terms, Euler form from theta forms") {
    for (auto [r, s] : kFramings) {
        auto kp = validate_knot(1, r, s);
        INFO(kp.to_string());
        auto q = frac(1, 7);
        auto W = annulus_potential(kp, q, 4);
        CHECK(!W.is_zero());
        CHECK(swap_symmetric(W));
        W.for_each([&](const PhasedSeries::Exponents& e, const Rational&) {
            CHECK(e[0] > 0);
            CHECK(e[1] > 0);
        });
        auto curve = make_spectral_curve(mirror_curve_p1(kp, q), 16);
        CHECK(W.euler(0) + W.euler(1) == annulus_euler_from_theta(curve, kp, q, 4));
    }
}

TEST_CASE("annulus at q = 0: curve side equals the A-model product formula") {
    for (auto [r, s] : kFramings) {
        auto kp = validate_knot(1, r, s);
        INFO(kp.to_string());
        auto B = annulus_q0_B(kp, 3, 3);
        CHECK(!B.is_zero());
        CHECK(B == annulus_q0(kp, 3, 3).euler);
        CHECK(B.specialize(1, 0).is_zero());
        CHECK(annulus_q0_B(kp, 2, 3) == annulus_q0(kp, 2, 3).euler);
    }
}

TEST_CASE("open potentials of omega_{0,3} and omega_{1,1} are rational and vanish at the origin") {
    auto kp = validate_knot(1, 1, 1);
    auto q = frac(1, 7);
    auto curve = make_spectral_curve(mirror_curve_p1(kp, q), local_order_for(1, 1, 3));
    EORecursion eo(curve);
    auto W03 = wgn_potential(curve, kp, q, eo.omega(0, 3), 3);
    CHECK(!W03.is_zero());
    W03.for_each([&](const PhasedSeries::Exponents& e, const Rational& c) {
        for (int m : e) CHECK(m > 0);
        CHECK(W03.coeff({e[1], e[0], e[2]}) == c);
        CHECK(W03.coeff({e[0], e[2], e[1]}) == c);
    });
    auto W11 = wgn_potential(curve, kp, q, eo.omega(1, 1), 4);
    CHECK(!W11.is_zero());
    CHECK(W11.constant_term() == 0);
}
