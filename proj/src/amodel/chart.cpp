#include "mirror/amodel/chart.hpp"

#include <stdexcept>

namespace mirror {

WeightMonomial WeightMonomial::operator*(const WeightMonomial& o) const {
    WeightMonomial r;
    r.coeff = coeff * o.coeff;
    for (int i = 0; i < 3; ++i) r.exp[i] = exp[i] + o.exp[i];
    return r;
}

bool WeightMonomial::integral() const {
    for (const auto& e : exp)
        if (!is_integer(e)) return false;
    return true;
}

long WeightMonomial::v_power() const {
    Rational t = exp[0] + exp[1] + exp[2];
    if (!is_integer(t)) throw std::domain_error("WeightMonomial: fractional total v power");
    return t.get_num().get_si();
}

Rational WeightMonomial::value(const std::array<Rational, 3>& w) const {
    if (!integral()) throw std::domain_error("WeightMonomial: fractional weight exponent " + to_string());
    Rational v = coeff;
    for (int i = 0; i < 3; ++i) v *= pow(w[i], exp[i].get_num().get_si());
    return v;
}

std::string WeightMonomial::to_string() const {
    std::string s = mirror::to_string(coeff);
    for (int i = 0; i < 3; ++i)
        if (exp[i] != 0) s += "*sw" + std::to_string(i + 1) + "^(" + mirror::to_string(exp[i]) + ")";
    return s;
}

Rational OrbifoldChartData::c(int i, long j) const {
    j = pos_mod(j, p);
    switch (i) {
        case 1: return frac(j, p);
        case 2: return 0;
        case 3: return j == 0 ? Rational(0) : Rational(1) - frac(j, p);
        default: throw std::invalid_argument("OrbifoldChartData::c: coordinate index must be 1, 2 or 3");
    }
}

OrbifoldChartData chart_data(const KnotParams& kp) {
    OrbifoldChartData c;
    c.p = kp.p;
    c.w = {frac(kp.r, kp.p), Rational(-kp.k), frac(kp.s, kp.p)};
    return c;
}

CyclotomicNumber character(long p, long alpha, long j) {
    return CyclotomicNumber::root_power(static_cast<int>(p), pos_mod(alpha * j, p));
}

CyclotomicNumber character_inner_product(long p, long alpha, long beta) {
    CyclotomicNumber s(static_cast<int>(p), 0);
    for (long j = 0; j < p; ++j) s += character(p, alpha, j) * character(p, beta, -j);
    return s * CyclotomicNumber(static_cast<int>(p), frac(1, p));
}

CRStructure cr_ring_data(long j, long jp, const OrbifoldChartData& chart) {
    CRStructure out;
    long prod = chart.multiply(j, jp);
    out.product_sector = prod;
    for (int i = 1; i <= 3; ++i) out.product_exp[i - 1] = chart.c(i, j) + chart.c(i, jp) - chart.c(i, prod);
    out.pairing_nonzero = prod == 0;
    if (out.pairing_nonzero) {
        out.pairing.coeff = frac(1, chart.p);
        for (int i = 1; i <= 3; ++i) out.pairing.exp[i - 1] = chart.c(i, j) == 0 ? Rational(-1) : Rational(0);
    } else {
        out.pairing.coeff = 0;
    }
    return out;
}

std::vector<CyclotomicNumber> canonical_basis_vector(long gamma, const OrbifoldChartData& chart) {
    int n = static_cast<int>(chart.p);
    std::vector<CyclotomicNumber> v;
    for (long j = 0; j < chart.p; ++j) v.push_back(character(chart.p, gamma, -j) * CyclotomicNumber(n, frac(1, chart.p)));
    return v;
}

std::vector<CyclotomicNumber> canonical_basis_product(long gamma, long gammap, const OrbifoldChartData& chart) {
    int n = static_cast<int>(chart.p);
    auto a = canonical_basis_vector(gamma, chart);
    auto b = canonical_basis_vector(gammap, chart);
    std::vector<CyclotomicNumber> out(static_cast<size_t>(chart.p), CyclotomicNumber(n, 0));
    for (long j = 0; j < chart.p; ++j) {
        for (long jp = 0; jp < chart.p; ++jp) {
            // 1bar_h * 1bar_h' = 1bar_{hh'}: the weight factors of the product cancel the normalizations.
            CRStructure s = cr_ring_data(j, jp, chart);
            out[static_cast<size_t>(s.product_sector)] += a[static_cast<size_t>(j)] * b[static_cast<size_t>(jp)];
        }
    }
    return out;
}

}  // namespace mirror
