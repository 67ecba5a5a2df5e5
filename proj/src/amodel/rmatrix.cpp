#include "mirror/amodel/rmatrix.hpp"

#include "mirror/algebra/laurent.hpp"

#include <mutex>
#include <stdexcept>

namespace mirror {

namespace {

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    return Rational(factorial(n)) * inv_factorial(k) * inv_factorial(n - k);
}

}  // namespace

Rational bernoulli_number(long m) {
    if (m < 0) throw std::invalid_argument("bernoulli_number: negative index");
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
    while (static_cast<long>(table.size()) <= m) {
        long n = static_cast<long>(table.size());
        Rational s = 0;
        for (long j = 0; j < n; ++j) s += binomial(n + 1, j) * table[static_cast<size_t>(j)];
        table.push_back(-s / (n + 1));
    }
    return table[static_cast<size_t>(m)];
}

Rational bernoulli_polynomial(long m, const Rational& x) {
    if (m < 0) throw std::invalid_argument("bernoulli_polynomial: negative degree");
    Rational s = 0;
    for (long k = 0; k <= m; ++k) s += binomial(m, k) * bernoulli_number(k) * pow(x, m - k);
    return s;
}

std::vector<Rational> bernoulli_exponential(const std::array<Rational, 3>& c, const std::array<Rational, 3>& w, int order) {
    using LS = LaurentSeries<Rational>;
    if (order <= 0) return {};
    std::vector<Rational> log_coeffs(static_cast<size_t>(order), Rational(0));
    for (int i = 0; i < 3; ++i) {
        for (int m = 1; m < order; ++m) {
            Rational t = bernoulli_polynomial(m + 1, c[static_cast<size_t>(i)]) / (Rational(m) * (m + 1)) *
                         pow(1 / w[static_cast<size_t>(i)], m);
            log_coeffs[static_cast<size_t>(m)] += m % 2 ? -t : t;
        }
    }
    // exp of a series without constant term, by the power series of exp.
    LS g(0, log_coeffs, order);
    LS acc = LS::constant(Rational(1), order);
    LS pw = LS::constant(Rational(1), order);
    for (int n = 1; n < order; ++n) {
        pw = (pw * g).truncate(order);
        acc += pw * LS::constant(inv_factorial(n));
    }
    std::vector<Rational> out;
    for (int e = 0; e < order; ++e) out.push_back(acc.coeff(e));
    return out;
}

SeriesMatrix r_matrix_limit(const OrbifoldChartData& chart, int order) {
    const long p = chart.p;
    const int n = static_cast<int>(p);
    std::vector<std::vector<Rational>> E;
    for (long j = 0; j < p; ++j) E.push_back(bernoulli_exponential({chart.c(1, j), chart.c(2, j), chart.c(3, j)}, chart.w, order));
    SeriesMatrix M;
    M.order = order;
    M.entry.assign(static_cast<size_t>(p),
                   std::vector<std::vector<CyclotomicNumber>>(static_cast<size_t>(p),
                                                              std::vector<CyclotomicNumber>(static_cast<size_t>(order), CyclotomicNumber(n, 0))));
    CyclotomicNumber inv_p(n, frac(1, p));
    for (long d = 0; d < p; ++d)
        for (long g = 0; g < p; ++g)
            for (long j = 0; j < p; ++j) {
                CyclotomicNumber ph = character(p, d, j) * character(p, g, -j) * inv_p;
                for (int e = 0; e < order; ++e)
                    M.entry[static_cast<size_t>(d)][static_cast<size_t>(g)][static_cast<size_t>(e)] +=
                        ph * CyclotomicNumber(n, E[static_cast<size_t>(j)][static_cast<size_t>(e)]);
            }
    return M;
}

SeriesMatrix r_matrix_limit(const KnotParams& kp, int order) { return r_matrix_limit(chart_data(kp), order); }

SeriesMatrix identity_series_matrix(long p, int order) {
    const int n = static_cast<int>(p);
    SeriesMatrix I;
    I.order = order;
    I.entry.assign(static_cast<size_t>(p),
                   std::vector<std::vector<CyclotomicNumber>>(static_cast<size_t>(p),
                                                              std::vector<CyclotomicNumber>(static_cast<size_t>(order), CyclotomicNumber(n, 0))));
    if (order > 0)
        for (long d = 0; d < p; ++d) I.entry[static_cast<size_t>(d)][static_cast<size_t>(d)][0] = CyclotomicNumber(n, 1);
    return I;
}

SeriesMatrix transpose_reflect_product(const SeriesMatrix& R) {
    const size_t p = R.size();
    const int order = R.order;
    const int n = p ? R.entry[0][0].empty() ? 1 : R.entry[0][0][0].order() : 1;
    SeriesMatrix out = identity_series_matrix(static_cast<long>(p), order);
    for (auto& row : out.entry)
        for (auto& col : row)
            for (auto& c : col) c = CyclotomicNumber(n, 0);
    // (R^T(-z) R(z))_{ab} = sum_c R_{ca}(-z) R_{cb}(z).
    for (size_t a = 0; a < p; ++a)
        for (size_t b = 0; b < p; ++b)
            for (size_t c = 0; c < p; ++c)
                for (int i = 0; i < order; ++i)
                    for (int j = 0; i + j < order; ++j) {
                        CyclotomicNumber t = R.entry[c][a][static_cast<size_t>(i)] * R.entry[c][b][static_cast<size_t>(j)];
                        if (i % 2) t = -t;
                        out.entry[a][b][static_cast<size_t>(i + j)] += t;
                    }
    return out;
}

}  // namespace mirror
