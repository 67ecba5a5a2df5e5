#include "printers.hpp"

#include "mirror/curve/mirror_p1.hpp"
#include "mirror/recursion/dvv.hpp"
#include "mirror/recursion/eo.hpp"
#include "mirror/recursion/graphs.hpp"
#include "mirror/recursion/graphsum.hpp"

#include <cstdlib>
#include <thread>

using namespace mirror;

TEST_CASE("DVV intersection numbers") {
    CHECK(dvv_intersection(0, {0, 0, 0}) == 1);
    CHECK(dvv_intersection(1, {1}) == frac(1, 24));
    CHECK(dvv_intersection(0, {0, 2}) == 0);
    CHECK(dvv_intersection(2, {2, 3}) == frac(29, 5760));
    CHECK(dvv_intersection(0, {1, 0, 0, 0}) == 1);
    CHECK(dvv_intersection(1, {1, 1}) == frac(1, 24));
    // <tau_{3g-2}>_g = 1 / (24^g g!).
    for (int g = 1; g <= 5; ++g) {
        Rational expect = 1;
        for (int i = 1; i <= g; ++i) expect /= Rational(24 * i);
        CHECK(dvv_intersection(g, {3 * g - 2}) == expect);
    }
    CHECK(dvv_intersection(0, {0, 0}) == 0);
    CHECK_THROWS_AS(dvv_intersection(0, {}), RecursionError);
    CHECK_THROWS_AS(dvv_intersection(-1, {0}), RecursionError);
}

TEST_CASE("bare and decorated graph enumeration") {
    auto g03 = enumerate_stable_graphs(0, 3, 1);
    REQUIRE(g03.size() == 1);
    CHECK(g03[0].vertex_count() == 1);
    CHECK(g03[0].edges.empty());
    CHECK(g03[0].leg_height == std::vector<int>{0, 0, 0});
    CHECK(g03[0].automorphisms == 1);

    auto b11 = enumerate_bare_graphs(1, 1);
    REQUIRE(b11.size() == 2);
    int loops = 0;
    for (const auto& G : b11) {
        if (G.edges.size() == 1) {
            ++loops;
            CHECK(G.genus == std::vector<int>{0});
            CHECK(G.automorphisms == 2);
        } else {
            CHECK(G.genus == std::vector<int>{1});
        }
    }
    CHECK(loops == 1);
    // Genus-two graphs without legs: the seven standard topologies.
    CHECK(enumerate_bare_graphs(2, 0).size() == 7);
    for (auto [g, n] : {std::pair{0, 4}, {1, 2}, {2, 1}})
        for (const auto& G : enumerate_stable_graphs(g, n, 2)) {
            CHECK(G.total_genus() == g);
            for (int v = 0; v < G.vertex_count(); ++v) CHECK(2 * G.genus[static_cast<size_t>(v)] - 2 + G.valence(v) > 0);
        }
}

TEST_CASE("Airy closed loop: EO coefficients equal 2^{g-1} times DVV") {
    auto curve = airy_curve(local_order_for(2, 2, 4));
    EORecursion eo(curve);
    auto w03 = eo.omega(0, 3);
    REQUIRE(w03.terms.size() == 1);
    CHECK(w03.terms.begin()->second == Field(frac(1, 2)));
    auto w11 = eo.omega(1, 1);
    REQUIRE(w11.terms.size() == 1);
    CHECK(w11.terms.begin()->first == FormIndex{{0, 1}});
    CHECK(w11.terms.begin()->second == Field(frac(1, 24)));
    for (auto [g, n] : {std::pair{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}}) {
        auto w = eo.omega(g, n);
        CHECK(w.is_symmetric());
        Rational scale = g >= 1 ? Rational(1 << (g - 1)) : frac(1, 2);
        // Every composition of 3g - 3 + n into n parts.
        std::vector<int> k(static_cast<size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == n - 1) {
                k[static_cast<size_t>(i)] = left;
                FormIndex idx;
                for (int x : k) idx.emplace_back(0, x);
                auto it = w.terms.find(idx);
                Field got = it == w.terms.end() ? Field(0) : it->second;
                CHECK(got == Field(scale * dvv_intersection(g, k)));
                return;
            }
            for (int x = 0; x <= left; ++x) {
                k[static_cast<size_t>(i)] = x;
                rec(i + 1, left - x);
            }
        };
        rec(0, 3 * g - 3 + n);
        CHECK(w == graph_sum_B(curve, g, n));
    }
}

TEST_CASE("literal orientation multiplies omega_{g,n} by (-1)^n") {
    auto kp = validate_knot(1, 1, 1);
    auto curve = make_spectral_curve(mirror_curve_p1(kp, frac(1, 7)), local_order_for(1, 2, 3));
    EORecursion std_eo(curve), lit_eo(curve, Orientation::Literal);
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
        auto a = std_eo.omega(g, n);
        auto b = lit_eo.omega(g, n);
        for (auto& [idx, c] : a.terms) c = n % 2 ? -c : c;
        CHECK(a == b);
    }
}

TEST_CASE("p=1 curve: recursion is symmetric and matches both graph-sum arrangements") {
    auto kp = validate_knot(1, 1, 1);
    auto curve = make_spectral_curve(mirror_curve_p1(kp, frac(1, 7)), local_order_for(1, 2, 3));
    EORecursion eo(curve);
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {1, 2}}) {
        auto w = eo.omega(g, n);
        CHECK(w.is_symmetric());
        auto gs = graph_sum_B(curve, g, n);
        CHECK(Multidifferential::first_difference(w, gs) == "");
        CHECK(gs == graph_sum_labeled(curve, g, n));
    }
}

TEST_CASE("graph sum and recursion cache do not depend on the thread count") {
    auto kp = validate_knot(1, 2, 1);
    auto curve = make_spectral_curve(mirror_curve_p1(kp, frac(-1, 5)), local_order_for(1, 2, 0));
    setenv("MIRROR_RECURSION_THREADS", "1", 1);
    CHECK(recursion_threads() == 1);
    auto serial = graph_sum_B(curve, 1, 2);
    setenv("MIRROR_RECURSION_THREADS", "4", 1);
    CHECK(recursion_threads() == 4);
    auto parallel = graph_sum_B(curve, 1, 2);
    CHECK(serial == parallel);
    // Concurrent requests against one recursion object fill the cache once.
    EORecursion eo(curve);
    std::vector<Multidifferential> got(4);
    std::vector<std::thread> pool;
    for (size_t i = 0; i < got.size(); ++i) pool.emplace_back([&, i] { got[i] = eo.omega(1, 2); });
    for (auto& t : pool) t.join();
    for (const auto& w : got) CHECK(w == serial);
    unsetenv("MIRROR_RECURSION_THREADS");
}
