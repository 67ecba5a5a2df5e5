#include "properties.hpp"

#include "mirror/cli/checks.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

using namespace mirror;

namespace {

const std::vector<std::tuple<long, long, long>> kTuples{{1, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 1, 2}, {5, 2, 3}};

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Folds one report into the outcome; the first failure is kept as detail.
void fold(Outcome& o, const CheckReport& rep) {
    if (rep.pass) return;
    if (o.pass) {
        o.detail = rep.check + " " + rep.params.dump();
        if (rep.first_mismatch)
            o.detail += " at " + rep.first_mismatch->monomial + ": " + rep.first_mismatch->lhs + " vs " + rep.first_mismatch->rhs;
    }
    o.pass = false;
}

Outcome disk_identity() {
    Outcome o;
    for (auto [p, r, s] : kTuples) fold(o, check_disk(p, r, s, 3, 3));
    return o;
}

Outcome v_series_routes() {
    Outcome o;
    for (auto [p, r, s] : kTuples) fold(o, check_vseries(p, r, s, 3, 3));
    return o;
}

Outcome graph_sum_equivalence() {
    Outcome o;
    for (auto [g, n] : {std::pair{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}}) fold(o, check_graphsum(1, 1, g, n, frac(1, 7)));
    return o;
}

Outcome airy_loop() {
    Outcome o;
    fold(o, check_airy(3));
    return o;
}

Outcome r_matrix() {
    Outcome o;
    for (auto [p, r, s] : std::vector<std::tuple<long, long, long>>{{1, 1, 1}, {2, 1, 1}, {3, 1, 2}, {5, 2, 3}})
        fold(o, check_rmatrix(p, r, s, 5, frac(1, 7)));
    fold(o, check_rmatrix(1, 1, 1, 4, frac(1, 7)));
    return o;
}

Outcome annulus() {
    Outcome o;
    fold(o, check_annulus_q0(1, 1, 3, 3));
    return o;
}

Outcome properties() {
    Outcome o;
    for (const auto& s : run_property_suites(20240601, 20))
        if (s.failures || s.instances < 20) {
            if (o.pass) o.detail = s.name + ": " + s.first_failure;
            o.pass = false;
        }
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"disk potential: F01(tau(q); X) = -r h W01, five tuples, q-degree <= 3, X-degree <= 3", disk_identity},
        {"v series: closed form equals Newton solve, five tuples", v_series_routes},
        {"graph sum equals recursion on the p=1 curve at q=1/7, five (g,n)", graph_sum_equivalence},
        {"Airy closed loop against the DVV table", airy_loop},
        {"R matrix: limit unitarity for p in {1,2,3,5}, q->0 identification for p=1", r_matrix},
        {"annulus at q=0, p=1, X-orders (3,3)", annulus},
        {"property suites, 20 random instances each", properties},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
                  << secs << " s)";
        if (!o.pass) std::cout << "  " << o.detail;
        std::cout << std::endl;
        failed += o.pass ? 0 : 1;
    }
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
