#include "mirror/cli/checks.hpp"

#include "mirror/amodel/disk.hpp"
#include "mirror/amodel/rmatrix.hpp"
#include "mirror/curve/mirror_p1.hpp"
#include "mirror/curve/rcheck.hpp"
#include "mirror/curve/vseries.hpp"
#include "mirror/recursion/dvv.hpp"
#include "mirror/recursion/eo.hpp"
#include "mirror/recursion/graphsum.hpp"
#include "mirror/recursion/wgn.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace mirror {

namespace {

using Clock = std::chrono::steady_clock;

// Runs body and stores its wall time in the report.
CheckReport timed(CheckReport rep, const std::function<void(CheckReport&)>& body) {
    auto start = Clock::now();
    body(rep);
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return rep;
}

void set_params(CheckReport& rep, const KnotParams& kp) {
    rep.params["p"] = kp.p;
    rep.params["r"] = kp.r;
    rep.params["s"] = kp.s;
}

std::optional<Mismatch> compare_series(const PhasedSeries& lhs, const PhasedSeries& rhs) {
    auto e = PhasedSeries::first_difference(lhs, rhs);
    if (!e) return std::nullopt;
    return Mismatch{lhs.monomial_string(*e), to_string(lhs.coeff(*e)), to_string(rhs.coeff(*e))};
}

void record(CheckReport& rep, std::optional<Mismatch> m) {
    if (!rep.first_mismatch && m) rep.first_mismatch = std::move(m);
    rep.pass = !rep.first_mismatch;
}

std::optional<Mismatch> compare_forms(const Multidifferential& lhs, const Multidifferential& rhs) {
    for (const auto* side : {&lhs, &rhs})
        for (const auto& [idx, c] : side->terms) {
            auto a = lhs.terms.find(idx);
            auto b = rhs.terms.find(idx);
            Field x = a == lhs.terms.end() ? Field(0) : a->second;
            Field y = b == rhs.terms.end() ? Field(0) : b->second;
            if (x != y) return Mismatch{index_string(idx), x.to_string(), y.to_string()};
        }
    return std::nullopt;
}

std::string matrix_monomial(const std::string& name, size_t a, size_t b, int e) {
    return name + "[" + std::to_string(a) + "][" + std::to_string(b) + "] z^" + std::to_string(e);
}

KnotParams knot_or_usage(long p, long r, long s) {
    try {
        return validate_knot(p, r, s);
    } catch (const KnotError& e) {
        throw UsageError(e.what());
    }
}

void require_order(int order, const char* name) {
    if (order < 0) throw UsageError(std::string(name) + " must be nonnegative");
}

}  // namespace

nlohmann::ordered_json CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = pass ? "pass" : "fail";
    if (first_mismatch)
        j["first_mismatch"] = {{"monomial", first_mismatch->monomial},
                               {"lhs", first_mismatch->lhs},
                               {"rhs", first_mismatch->rhs}};
    else
        j["first_mismatch"] = nullptr;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string CheckReport::to_tsv() const {
    std::ostringstream os;
    os << "check\t" << check << '\n';
    for (const auto& [k, v] : params.items()) os << "param." << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    os << "status\t" << (pass ? "pass" : "fail") << '\n';
    if (first_mismatch) {
        os << "first_mismatch.monomial\t" << first_mismatch->monomial << '\n';
        os << "first_mismatch.lhs\t" << first_mismatch->lhs << '\n';
        os << "first_mismatch.rhs\t" << first_mismatch->rhs << '\n';
    } else {
        os << "first_mismatch\tnull\n";
    }
    os << "elapsed_ms\t" << elapsed_ms << '\n';
    return os.str();
}

long default_s(long p, long r) {
    for (long s = 1; s <= 64 * p + 64; ++s) {
        try {
            validate_knot(p, r, s);
            return s;
        } catch (const KnotError&) {
        }
    }
    throw UsageError("no valid s for p = " + std::to_string(p) + ", r = " + std::to_string(r));
}

CheckReport check_disk(long p, long r, long s, int q_order, int x_order) {
    CheckReport rep;
    rep.check = "disk";
    KnotParams kp = knot_or_usage(p, r, s);
    require_order(q_order, "q-order");
    require_order(x_order, "x-order");
    set_params(rep, kp);
    rep.params["q_order"] = q_order;
    rep.params["x_order"] = x_order;
    return timed(std::move(rep), [&](CheckReport& rep) {
        PhasedSeries A = disk_potential_A(kp, q_order, x_order);
        PhasedSeries phi = phi_newton(kp, eta_layout(kp, q_order, static_cast<int>(kp.r) * x_order));
        PhasedSeries B = disk_potential_B(kp, phi);
        record(rep, compare_series(A, B));
    });
}

CheckReport check_vseries(long p, long r, long s, int q_order, int x_order) {
    CheckReport rep;
    rep.check = "vseries";
    KnotParams kp = knot_or_usage(p, r, s);
    require_order(q_order, "q-order");
    require_order(x_order, "x-order");
    set_params(rep, kp);
    rep.params["q_order"] = q_order;
    rep.params["eta_order"] = static_cast<int>(kp.r) * x_order;
    return timed(std::move(rep), [&](CheckReport& rep) {
        LayoutPtr L = eta_layout(kp, q_order, static_cast<int>(kp.r) * x_order);
        PhasedSeries closed = phi_closed_form(kp, L);
        PhasedSeries newton = phi_newton(kp, L);
        record(rep, compare_series(closed, newton));
        PhasedSeries residual = framed_curve_residual(kp, closed);
        record(rep, compare_series(residual, PhasedSeries(residual.layout_ptr())));
    });
}

CheckReport check_graphsum(long r, long s, int g, int n, const Rational& q) {
    CheckReport rep;
    rep.check = "graphsum";
    KnotParams kp = knot_or_usage(1, r, s);
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) throw UsageError("graph sum needs g >= 0, n >= 1 and 2g - 2 + n > 0");
    set_params(rep, kp);
    rep.params["g"] = g;
    rep.params["n"] = n;
    rep.params["q_value"] = to_string(q);
    return timed(std::move(rep), [&](CheckReport& rep) {
        GenusZeroCurve curve = make_spectral_curve(mirror_curve_p1(kp, q), local_order_for(g, n, 0));
        EORecursion eo(curve);
        Multidifferential w = eo.omega(g, n);
        Multidifferential gs = graph_sum_B(curve, g, n);
        record(rep, compare_forms(w, gs));
    });
}

CheckReport check_airy(int max_euler) {
    CheckReport rep;
    rep.check = "airy";
    rep.params["max_euler"] = max_euler;
    if (max_euler < 1) throw UsageError("max_euler must be positive");
    return timed(std::move(rep), [&](CheckReport& rep) {
        int max_g = (max_euler + 1) / 2;
        GenusZeroCurve curve = airy_curve(local_order_for(max_g, max_euler + 2 - 2 * max_g, 0) + 4);
        EORecursion eo(curve);
        // The normalization anchors themselves.
        if (dvv_intersection(0, {0, 0, 0}) != 1)
            record(rep, Mismatch{"<tau_0^3>_0", to_string(dvv_intersection(0, {0, 0, 0})), "1"});
        if (dvv_intersection(1, {1}) != frac(1, 24))
            record(rep, Mismatch{"<tau_1>_1", to_string(dvv_intersection(1, {1})), "1/24"});
        for (int g = 0; g <= max_g; ++g)
            for (int n = 1; 2 * g - 2 + n <= max_euler; ++n) {
                if (2 * g - 2 + n <= 0) continue;
                Multidifferential w = eo.omega(g, n);
                Multidifferential expect{g, n, {}};
                Rational scale = g >= 1 ? Rational(Integer(1) << (g - 1)) : frac(1, 2);
                std::vector<int> k(static_cast<size_t>(n), 0);
                std::function<void(int, int)> rec = [&](int i, int left) {
                    if (i == n - 1) {
                        k[static_cast<size_t>(i)] = left;
                        FormIndex idx;
                        for (int x : k) idx.emplace_back(0, x);
                        expect.add(idx, Field(scale * dvv_intersection(g, k)));
                        return;
                    }
                    for (int x = 0; x <= left; ++x) {
                        k[static_cast<size_t>(i)] = x;
                        rec(i + 1, left - x);
                    }
                };
                rec(0, 3 * g - 3 + n);
                auto tag = [&](std::optional<Mismatch> m, const char* what) {
                    if (m) m->monomial = "omega_{" + std::to_string(g) + "," + std::to_string(n) + "} " + what + " " + m->monomial;
                    return m;
                };
                record(rep, tag(compare_forms(w, expect), "vs DVV"));
                record(rep, tag(compare_forms(w, graph_sum_B(curve, g, n)), "vs graph sum"));
            }
        rep.pass = !rep.first_mismatch;
    });
}

CheckReport check_rmatrix(long p, long r, long s, int z_order, const Rational& q) {
    CheckReport rep;
    rep.check = "rmatrix";
    KnotParams kp = knot_or_usage(p, r, s);
    require_order(z_order, "z-order");
    set_params(rep, kp);
    rep.params["z_order"] = z_order;
    if (kp.p == 1) rep.params["q_value"] = to_string(q);
    return timed(std::move(rep), [&](CheckReport& rep) {
        rep.pass = true;
        if (z_order == 0) return;
        SeriesMatrix R = r_matrix_limit(kp, z_order);
        SeriesMatrix U = transpose_reflect_product(R);
        SeriesMatrix I = identity_series_matrix(kp.p, z_order);
        for (size_t a = 0; a < U.size() && !rep.first_mismatch; ++a)
            for (size_t b = 0; b < U.size() && !rep.first_mismatch; ++b)
                for (int e = 0; e < z_order; ++e)
                    if (U.entry[a][b][static_cast<size_t>(e)] != I.entry[a][b][static_cast<size_t>(e)]) {
                        record(rep, Mismatch{matrix_monomial("R^T(-z)R(z)", a, b, e), U.entry[a][b][static_cast<size_t>(e)].to_string(),
                                             I.entry[a][b][static_cast<size_t>(e)].to_string()});
                        break;
                    }
        if (kp.p != 1) return;

        // Near ramification point 0 the q -> 0 limit of the curve is the chart curve; R-check(-z) there
        // must equal the Bernoulli limit entry. Local orders escalate until the expansion suffices.
        auto with_escalation = [&](const std::function<FieldSeriesMatrix(int)>& make) {
            int lo = local_order_for(0, 0, z_order);
            for (int attempt = 0;; ++attempt) {
                try {
                    return make(lo);
                } catch (const CurveError& e) {
                    if (attempt >= 3 || std::string(e.what()).find("local order") == std::string::npos) throw;
                    lo *= 2;
                }
            }
        };
        FieldSeriesMatrix lim = with_escalation([&](int lo) { return r_check_matrix(limit_curve_p1(kp, 0, lo), z_order); });
        for (int e = 0; e < z_order && !rep.first_mismatch; ++e) {
            Field lhs = e % 2 ? -lim.at(0, 0, e) : lim.at(0, 0, e);
            Field rhs(R.entry[0][0][static_cast<size_t>(e)].rational_value());
            if (lhs != rhs) record(rep, Mismatch{matrix_monomial("lim R-check(-z)", 0, 0, e), lhs.to_string(), rhs.to_string()});
        }
        FieldSeriesMatrix full =
            with_escalation([&](int lo) { return r_check_matrix(make_spectral_curve(mirror_curve_p1(kp, q), lo), z_order); });
        FieldSeriesMatrix u = r_check_unitarity(full);
        for (size_t a = 0; a < u.size() && !rep.first_mismatch; ++a)
            for (size_t b = 0; b < u.size() && !rep.first_mismatch; ++b)
                for (int e = 0; e < u.order; ++e) {
                    Field want(e == 0 && a == b ? 1 : 0);
                    if (u.at(a, b, e) != want) {
                        record(rep, Mismatch{matrix_monomial("R-check^T(-z)R-check(z)", a, b, e), u.at(a, b, e).to_string(),
                                             want.to_string()});
                        break;
                    }
                }
    });
}

CheckReport check_annulus_q0(long r, long s, int x1_order, int x2_order) {
    CheckReport rep;
    rep.check = "annulus_q0";
    KnotParams kp = knot_or_usage(1, r, s);
    require_order(x1_order, "x1-order");
    require_order(x2_order, "x2-order");
    set_params(rep, kp);
    rep.params["x1_order"] = x1_order;
    rep.params["x2_order"] = x2_order;
    return timed(std::move(rep), [&](CheckReport& rep) {
        PhasedSeries B = annulus_q0_B(kp, x1_order, x2_order);
        PhasedSeries A = annulus_q0(kp, x1_order, x2_order).euler;
        record(rep, compare_series(B, A));
    });
}

}  // namespace mirror
