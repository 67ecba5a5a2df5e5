#include "mirror/curve/rcheck.hpp"

namespace mirror {

namespace {

Rational gaussian_moment(int m) {
    // sqrt(z)/(2 sqrt(pi)) int exp(-zeta^2/z) zeta^{2m} d zeta = (2m-1)!! z^{m+1} / 2^{m+1}.
    return odd_double_factorial(2 * m - 1) / pow(Rational(2), m + 1);
}

}  // namespace

FieldSeriesMatrix r_check_matrix(const GenusZeroCurve& curve, int order) {
    if (2 * order - 4 >= curve.local_order()) throw CurveError("insufficient local order for the R-check matrix");
    size_t n = curve.size();
    FieldSeriesMatrix r;
    r.order = order;
    r.entry.assign(n, std::vector<std::vector<Field>>(n, std::vector<Field>(static_cast<size_t>(order), Field(0))));
    for (size_t s = 0; s < n; ++s) {
        for (size_t sp = 0; sp < n; ++sp) {
            LocalSeries th = curve.theta_local(sp, 0, s);
            for (int e = 0; e < order; ++e) {
                // z^e comes from zeta^{2e-2}.
                r.entry[s][sp][static_cast<size_t>(e)] = Field(gaussian_moment(e - 1)) * th.coeff(2 * e - 2);
            }
        }
    }
    return r;
}

FieldSeriesMatrix r_check_unitarity(const FieldSeriesMatrix& r) {
    size_t n = r.size();
    FieldSeriesMatrix out;
    out.order = r.order;
    out.entry.assign(n, std::vector<std::vector<Field>>(n, std::vector<Field>(static_cast<size_t>(r.order), Field(0))));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                for (int i = 0; i < r.order; ++i)
                    for (int j = 0; i + j < r.order; ++j) {
                        Field t = r.at(c, a, i) * r.at(c, b, j);
                        if (i % 2) t = -t;
                        out.entry[a][b][static_cast<size_t>(i + j)] += t;
                    }
    return out;
}

BCheckTable b_check_from_bergman(const GenusZeroCurve& curve, int max_index) {
    size_t n = curve.size();
    BCheckTable t(n, std::vector<std::vector<std::vector<Field>>>(n));
    for (size_t s = 0; s < n; ++s)
        for (size_t sp = 0; sp < n; ++sp) {
            auto& m = t[s][sp];
            m.assign(static_cast<size_t>(max_index + 1), std::vector<Field>(static_cast<size_t>(max_index + 1), Field(0)));
            for (int k = 0; k <= max_index; ++k)
                for (int l = 0; l <= max_index; ++l) {
                    Rational f = odd_double_factorial(2 * k - 1) * odd_double_factorial(2 * l - 1) /
                                 pow(Rational(2), k + l + 1);
                    m[static_cast<size_t>(k)][static_cast<size_t>(l)] =
                        Field(f) * curve.bergman_coeff(s, sp, 2 * k, 2 * l);
                }
        }
    return t;
}

BCheckTable b_check_from_r(const FieldSeriesMatrix& r, int max_index) {
    int deg = 2 * max_index + 1;
    if (r.order <= deg) throw CurveError("R-check order too small for the B-check table");
    size_t n = r.size();
    BCheckTable t(n, std::vector<std::vector<std::vector<Field>>>(n));
    for (size_t s = 0; s < n; ++s)
        for (size_t sp = 0; sp < n; ++sp) {
            // N[a][b] = [z^a w^b](delta - sum R^{s}_{c}(z) R^{sp}_{c}(w)).
            std::vector<std::vector<Field>> N(static_cast<size_t>(deg + 1),
                                              std::vector<Field>(static_cast<size_t>(deg + 1), Field(0)));
            for (int a = 0; a <= deg; ++a)
                for (int b = 0; a + b <= deg; ++b) {
                    Field v = (a == 0 && b == 0 && s == sp) ? Field(1) : Field(0);
                    for (size_t c = 0; c < n; ++c) v -= r.at(s, c, a) * r.at(sp, c, b);
                    N[static_cast<size_t>(a)][static_cast<size_t>(b)] = v;
                }
            // (z + w) Q = N: Q[k][l] = N[k][l+1] - Q[k-1][l+1].
            std::vector<std::vector<Field>> Q(static_cast<size_t>(deg + 1),
                                              std::vector<Field>(static_cast<size_t>(deg + 1), Field(0)));
            for (int tot = 0; tot < deg; ++tot)
                for (int k = 0; k <= tot; ++k) {
                    int l = tot - k;
                    Field v = N[static_cast<size_t>(k)][static_cast<size_t>(l + 1)];
                    if (k > 0) v -= Q[static_cast<size_t>(k - 1)][static_cast<size_t>(l + 1)];
                    Q[static_cast<size_t>(k)][static_cast<size_t>(l)] = v;
                }
            auto& m = t[s][sp];
            m.assign(static_cast<size_t>(max_index + 1), std::vector<Field>(static_cast<size_t>(max_index + 1), Field(0)));
            for (int k = 0; k <= max_index; ++k)
                for (int l = 0; l <= max_index; ++l)
                    m[static_cast<size_t>(k)][static_cast<size_t>(l)] = Q[static_cast<size_t>(k)][static_cast<size_t>(l)];
        }
    return t;
}

FieldRF theta_hat_global(const GenusZeroCurve& curve, size_t sigma, int k) {
    FieldRF th0 = curve.theta_global(sigma, 0);
    if (k == 0) return th0;
    // d/dx = (1/x'(t)) d/dt.
    FieldRF xi = th0 / curve.dx();
    for (int i = 1; i < k; ++i) xi = xi.derivative() / curve.dx();
    FieldRF out = xi.derivative();
    return k % 2 ? -out : out;
}

std::string check_theta_hat(const GenusZeroCurve& curve, const FieldSeriesMatrix& r, int order, bool transposed) {
    size_t n = curve.size();
    std::vector<std::vector<FieldRF>> hat(n);
    for (size_t s = 0; s < n; ++s)
        for (int k = 0; k < order; ++k) hat[s].push_back(theta_hat_global(curve, s, k));
    for (size_t s = 0; s < n; ++s)
        for (int k = 0; k < order; ++k) {
            FieldRF rhs;
            for (size_t sp = 0; sp < n; ++sp)
                for (int j = 0; j <= k; ++j) {
                    Field c = transposed ? r.at(sp, s, j) : r.at(s, sp, j);
                    if (is_zero(c)) continue;
                    rhs += FieldRF(c) * hat[sp][static_cast<size_t>(k - j)];
                }
            if (!(rhs - curve.theta_global(s, k)).is_zero_function())
                return "sigma=" + std::to_string(s) + " k=" + std::to_string(k);
        }
    return "";
}

}  // namespace mirror
