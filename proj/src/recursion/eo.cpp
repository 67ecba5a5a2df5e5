#include "mirror/recursion/eo.hpp"

#include "mirror/recursion/dvv.hpp"

#include <algorithm>
#include <optional>

namespace mirror {

namespace {

// [zeta^{-1}] of a * b, with a check that the product is known there.
Field residue_of_product(const LocalSeries& a, const LocalSeries& b) {
    if (a.empty() || b.empty()) {
        int prec = std::min(LocalSeries::sat_add(a.precision(), b.valuation()),
                            LocalSeries::sat_add(b.precision(), a.valuation()));
        if (prec <= -1) throw CurveError("insufficient local order for a residue");
        return Field(0);
    }
    int prec = std::min(LocalSeries::sat_add(a.precision(), b.valuation()),
                        LocalSeries::sat_add(b.precision(), a.valuation()));
    if (prec <= -1) throw CurveError("insufficient local order for a residue");
    Field s(0);
    const auto& ac = a.coefficients();
    for (size_t i = 0; i < ac.size(); ++i) {
        if (is_zero(ac[i])) continue;
        int f = -1 - (a.low() + static_cast<int>(i));
        if (f < b.low() || f > b.degree()) continue;
        s += ac[i] * b.coeff(f);
    }
    return s;
}

// f(zeta) -> -f(-zeta): the form evaluated at the conjugate point, as a d zeta coefficient.
LocalSeries conjugate(const LocalSeries& f) { return -f.negate_variable(); }

void accumulate(BetaForm& form, const FormIndex& idx, const Field& c) {
    if (is_zero(c)) return;
    auto it = form.find(idx);
    if (it == form.end()) {
        form.emplace(idx, c);
        return;
    }
    it->second += c;
    if (is_zero(it->second)) form.erase(it);
}

using LocalGroups = std::map<FormIndex, LocalSeries>;

}  // namespace

EORecursion::EORecursion(const GenusZeroCurve& curve, Orientation orientation)
    : curve_(curve), sign_(orientation == Orientation::Standard ? 1 : -1) {}

Multidifferential EORecursion::omega(int g, int n) { return theta_basis(g, n, beta_form(g, n)); }

BetaForm EORecursion::beta_form(int g, int n) {
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) throw RecursionError("omega needs 2g - 2 + n > 0 and n >= 1");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find({g, n});
        if (it != cache_.end()) return it->second;
    }
    // One computation at a time fills the cache in recursion order.
    std::lock_guard<std::mutex> guard(compute_mu_);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find({g, n});
        if (it != cache_.end()) return it->second;
    }
    BetaForm f = compute(g, n);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(std::make_pair(g, n), std::move(f)).first->second;
}

BetaForm EORecursion::compute(int g, int n) {
    const int P = curve_.local_order();
    const int mmax = 6 * g - 6 + 2 * n;
    if (mmax + 4 >= P) throw CurveError("insufficient local order for omega_{" + std::to_string(g) + "," +
                                        std::to_string(n) + "}");
    // Lower forms, fetched without holding the compute lock recursively.
    std::map<std::pair<int, int>, BetaForm> lower;
    auto need = [&](int gg, int nn) -> const BetaForm& {
        auto key = std::make_pair(gg, nn);
        auto it = lower.find(key);
        if (it != lower.end()) return it->second;
        std::optional<BetaForm> f;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto c = cache_.find(key);
            if (c != cache_.end()) f = c->second;
        }
        if (!f) {
            f = compute(gg, nn);
            std::lock_guard<std::mutex> lock(mu_);
            cache_.emplace(key, *f);
        }
        return lower.emplace(key, std::move(*f)).first->second;
    };

    const int rest_n = n - 1;
    BetaForm out;
    for (size_t s = 0; s < curve_.size(); ++s) {
        LocalSeries dyinv = curve_.delta_y(s).inverse();
        auto kernel = [&](int m) {
            return Field(Rational(sign_) / Rational(2 * (m + 1))) * dyinv.shift(m);
        };
        // Local expansion at P_s of the first argument of a stored form, grouped by the rest.
        auto groups_of = [&](const BetaForm& form, bool conj) {
            LocalGroups gr;
            for (const auto& [idx, c] : form) {
                FormIndex rest(idx.begin() + 1, idx.end());
                LocalSeries f = curve_.beta_local(static_cast<size_t>(idx[0].first), idx[0].second, s);
                if (conj) f = conjugate(f);
                auto it = gr.find(rest);
                if (it == gr.end())
                    gr.emplace(rest, c * f);
                else
                    it->second += c * f;
            }
            return gr;
        };
        // omega_{0,2}(p, p_i) = sum_j beta^j_s(p_i) zeta^j d zeta.
        auto groups_b = [&](bool conj) {
            LocalGroups gr;
            for (int j = 0; j <= mmax + 4 && j < P; ++j) {
                Field c = conj && j % 2 == 0 ? Field(-1) : Field(1);
                gr.emplace(FormIndex{{static_cast<int>(s), j}}, LocalSeries::monomial(c, j));
            }
            return gr;
        };
        auto groups_for = [&](int gg, int nn, bool conj) {
            if (gg == 0 && nn == 2) return groups_b(conj);
            return groups_of(need(gg, nn), conj);
        };

        // Bracket terms: list of (local series in zeta, rest index over p_1..p_{n-1}).
        std::vector<std::pair<LocalSeries, FormIndex>> bracket;
        if (g >= 1) {
            if (g == 1 && n == 1) {
                // omega_{0,2}(p, pbar) = -(1/(4 zeta^2) + sum B_kl (-1)^l zeta^{k+l}) d zeta^2.
                std::vector<Field> c(static_cast<size_t>(P + 2), Field(0));
                c[0] = Field(frac(1, 4));
                for (int e = 0; e < P; ++e)
                    for (int k = 0; k <= e; ++k) {
                        Field b = curve_.bergman_coeff(s, s, k, e - k);
                        c[static_cast<size_t>(e + 2)] += (e - k) % 2 ? -b : b;
                    }
                bracket.emplace_back(-LocalSeries(-2, c, P), FormIndex{});
            } else {
                const BetaForm& f = need(g - 1, n + 1);
                std::map<FormIndex, LocalSeries> gr;
                for (const auto& [idx, c] : f) {
                    FormIndex rest(idx.begin() + 2, idx.end());
                    LocalSeries a = curve_.beta_local(static_cast<size_t>(idx[0].first), idx[0].second, s);
                    LocalSeries b = conjugate(curve_.beta_local(static_cast<size_t>(idx[1].first), idx[1].second, s));
                    LocalSeries t = c * (a * b);
                    auto it = gr.find(rest);
                    if (it == gr.end())
                        gr.emplace(rest, t);
                    else
                        it->second += t;
                }
                for (auto& [rest, ser] : gr) bracket.emplace_back(ser, rest);
            }
        }
        // Splits over g1 + g2 = g and I + J = {0..n-2}.
        for (int g1 = 0; g1 <= g; ++g1)
            for (unsigned mask = 0; mask < (1u << rest_n); ++mask) {
                int g2 = g - g1;
                std::vector<int> I, J;
                for (int i = 0; i < rest_n; ++i) (mask >> i & 1 ? I : J).push_back(i);
                int n1 = static_cast<int>(I.size()) + 1, n2 = static_cast<int>(J.size()) + 1;
                if ((g1 == 0 && n1 == 1) || (g2 == 0 && n2 == 1)) continue;
                LocalGroups e1 = groups_for(g1, n1, false);
                LocalGroups e2 = groups_for(g2, n2, true);
                for (const auto& [r1, f1] : e1)
                    for (const auto& [r2, f2] : e2) {
                        // Both factors are known at P_s with the given precision; keep the product.
                        LocalSeries prod = f1 * f2;
                        if (prod.empty()) continue;
                        FormIndex rest(static_cast<size_t>(rest_n));
                        for (size_t i = 0; i < I.size(); ++i) rest[static_cast<size_t>(I[i])] = r1[i];
                        for (size_t j = 0; j < J.size(); ++j) rest[static_cast<size_t>(J[j])] = r2[j];
                        bracket.emplace_back(std::move(prod), std::move(rest));
                    }
            }
        for (int m = 0; m <= mmax + 2; m += 2) {
            LocalSeries K = kernel(m);
            for (const auto& [ser, rest] : bracket) {
                Field r = residue_of_product(K, ser);
                if (is_zero(r)) continue;
                FormIndex idx = rest;
                idx.emplace_back(static_cast<int>(s), m);
                accumulate(out, idx, r);
            }
        }
    }
    for (const auto& [idx, c] : out)
        for (auto [s, m] : idx) {
            if (m % 2) throw CurveError("odd beta index survived in omega_{" + std::to_string(g) + "," +
                                        std::to_string(n) + "}");
            if (m > mmax) throw CurveError("beta index above the dimension bound");
        }
    return out;
}

Multidifferential theta_basis(int g, int n, const BetaForm& form) {
    Multidifferential w;
    w.g = g;
    w.n = n;
    for (const auto& [idx, c] : form) {
        FormIndex t;
        Field v = c;
        for (auto [s, m] : idx) {
            if (m % 2) throw CurveError("odd beta index has no theta form");
            // beta^{2d} = theta^d / theta_from_beta(d).
            v *= Field(Rational(1) / GenusZeroCurve::theta_from_beta(m / 2));
            t.emplace_back(s, m / 2);
        }
        w.add(t, v);
    }
    return w;
}

}  // namespace mirror
