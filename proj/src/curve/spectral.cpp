#include "mirror/curve/spectral.hpp"

namespace mirror {

namespace {

Field power(const Field& x, long e) {
    Field r(1);
    Field b = e < 0 ? x.inverse() : x;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
    return r;
}

}  // namespace

FieldPoly to_field_poly(const Poly<Rational>& p) {
    std::vector<Field> c;
    for (const auto& x : p.coefficients()) c.emplace_back(x);
    return FieldPoly(std::move(c));
}

FieldRF to_field_rf(const RationalFunction<Rational>& f) {
    return FieldRF(to_field_poly(f.numerator()), to_field_poly(f.denominator()));
}

LocalSeries to_local(const LaurentSeries<Rational>& s) {
    std::vector<Field> c;
    for (const auto& x : s.coefficients()) c.emplace_back(x);
    return LocalSeries(s.low(), std::move(c), s.precision());
}

GenusZeroCurve::GenusZeroCurve(std::string name, FieldRF dx, FieldRF dy, std::vector<QuadExt> points, int local_order)
    : name_(std::move(name)), dx_(std::move(dx)), dy_(std::move(dy)), order_(local_order) {
    if (points.empty()) throw CurveError("curve has no ramification points");
    if (order_ < 4) throw CurveError("local order too small");
    const int rel = 2 * order_ + 6;
    ctx_ = std::make_shared<RadicalContext>();
    std::vector<LocalSeries> x_local;
    std::vector<QuadExt> x2s;
    std::vector<Rational> rational_roots(points.size());
    std::vector<int> gen_index(points.size(), -1);
    for (size_t s = 0; s < points.size(); ++s) {
        Field a(points[s]);
        if (is_zero(dx_.denominator()(a))) throw CurveError("ramification point is a pole of dx");
        if (is_zero(dy_.denominator()(a))) throw CurveError("ramification point is a pole of dy");
        LocalSeries xs = dx_.laurent_at(a, rel + 2);
        if (xs.valuation() != 1) throw CurveError("point is not a simple zero of dx");
        LocalSeries X = xs.integrate();
        QuadExt x2 = X.coeff(2).base_value();
        x_local.push_back(X);
        x2s.push_back(x2);
        Rational root;
        if (!(x2.is_rational() && rational_sqrt(x2.a(), root))) {
            gen_index[s] = static_cast<int>(ctx_->names.size());
            ctx_->names.push_back("lambda" + std::to_string(s));
            ctx_->squares.push_back(x2);
        } else {
            rational_roots[s] = root;
        }
    }
    for (size_t s = 0; s < points.size(); ++s) {
        RamificationDatum d;
        d.t = points[s];
        d.lambda_sq = x2s[s];
        d.lambda = gen_index[s] < 0 ? Field(rational_roots[s]) : Field::generator(ctx_, gen_index[s]);
        LocalSeries ratio = Field(x2s[s].inverse()) * x_local[s].shift(-2);
        LocalSeries S = ratio.truncate(rel).sqrt_one_plus();
        scale_.push_back(S);
        // zeta = lambda * w, w = u S(u); invert w, then rescale.
        LocalSeries u_of_w = S.shift(1).reversion();
        d.u_of_zeta = u_of_w.scale_variable(d.lambda.inverse());
        d.dt_dzeta = d.u_of_zeta.derivative();
        LocalSeries ys = dy_.laurent_at(Field(points[s]), rel);
        if (ys.valuation() < 0) throw CurveError("dy has a pole at a ramification point");
        d.y_of_zeta = (ys.compose(d.u_of_zeta) * d.dt_dzeta).integrate();
        for (int k = 0; k < order_; ++k) d.h.push_back(d.y_of_zeta.coeff(k));
        points_.push_back(std::move(d));
    }
}

const std::vector<Field>& GenusZeroCurve::principal_coeffs(size_t sigma, int m) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(sigma, m);
    auto it = principal_.find(key);
    if (it != principal_.end()) return it->second;
    // e_{m,j} = lambda^{-m-1} [u^{m-j}] S(u)^{-m-1}; returns (j+1) e_{m,j}.
    const Field& lam = points_.at(sigma).lambda;
    LocalSeries sp = scale_.at(sigma).truncate(m + 1).pow(-(m + 1));
    Field lp = power(lam, -(m + 1));
    std::vector<Field> c;
    for (int j = 0; j <= m; ++j) c.push_back(Field(j + 1) * lp * sp.coeff(m - j));
    return principal_.emplace(key, std::move(c)).first->second;
}

const std::vector<LocalSeries>& GenusZeroCurve::inverse_powers(size_t sigma, size_t at) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = powers_.find({sigma, at});
        if (it != powers_.end()) return it->second;
    }
    const RamificationDatum& d = points_.at(at);
    LocalSeries shifted = d.u_of_zeta;
    if (sigma != at) shifted = shifted + LocalSeries::constant(Field(d.t - points_.at(sigma).t));
    LocalSeries base = shifted.inverse();
    LocalSeries cur = base * base * d.dt_dzeta;
    std::vector<LocalSeries> out;
    for (int j = 0; j < order_; ++j) {
        LocalSeries tr = cur.truncate(order_);
        if (tr.precision() < order_) throw CurveError("local expansion lost precision");
        out.push_back(tr);
        cur = cur * base;
    }
    std::lock_guard<std::mutex> lock(mu_);
    return powers_.emplace(std::make_pair(sigma, at), std::move(out)).first->second;
}

LocalSeries GenusZeroCurve::beta_local(size_t sigma, int m, size_t at) const {
    if (m < 0 || m >= order_) throw CurveError("beta index beyond the local order");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = beta_local_.find({sigma, m, at});
        if (it != beta_local_.end()) return it->second;
    }
    const auto& c = principal_coeffs(sigma, m);
    const auto& pw = inverse_powers(sigma, at);
    LocalSeries acc = LocalSeries::big_o(order_);
    for (int j = 0; j <= m; ++j) acc += c[static_cast<size_t>(j)] * pw[static_cast<size_t>(j)];
    std::lock_guard<std::mutex> lock(mu_);
    return beta_local_.emplace(std::make_tuple(sigma, m, at), acc).first->second;
}

FieldRF GenusZeroCurve::beta_global(size_t sigma, int m) const {
    const auto& c = principal_coeffs(sigma, m);
    Field a(points_.at(sigma).t);
    FieldPoly lin = FieldPoly::linear_root(a);
    FieldPoly num;
    FieldPoly pw(Field(1));
    for (int j = m; j >= 0; --j) {
        num += pw.scaled(c[static_cast<size_t>(j)]);
        pw *= lin;
    }
    FieldPoly den(Field(1));
    for (int i = 0; i < m + 2; ++i) den *= lin;
    return FieldRF(num, den);
}

Field GenusZeroCurve::bergman_coeff(size_t s, size_t sp, int k, int l) const {
    if (k < 0 || l < 0) throw CurveError("negative Bergman index");
    return beta_local(sp, l, s).coeff(k);
}

LocalSeries GenusZeroCurve::delta_y(size_t s) const {
    const LocalSeries& y = points_.at(s).y_of_zeta;
    return y - y.negate_variable();
}

Rational GenusZeroCurve::theta_from_beta(int d) { return -odd_double_factorial(2 * d - 1) / pow(Rational(2), d); }

FieldRF GenusZeroCurve::theta_global(size_t sigma, int d) const {
    FieldRF b = beta_global(sigma, 2 * d);
    return FieldRF(b.numerator().scaled(Field(theta_from_beta(d))), b.denominator());
}

LocalSeries GenusZeroCurve::theta_local(size_t sigma, int d, size_t at) const {
    return Field(theta_from_beta(d)) * beta_local(sigma, 2 * d, at);
}

}  // namespace mirror
