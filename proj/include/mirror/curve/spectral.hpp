#pragma once

#include "mirror/algebra/laurent.hpp"
#include "mirror/algebra/poly.hpp"
#include "mirror/algebra/quad_ext.hpp"
#include "mirror/algebra/radical.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace mirror {

// Coefficients of local data: QuadExt with formal square roots of the local scale factors.
using Field = RadicalNumber;
using LocalSeries = LaurentSeries<Field>;
using FieldPoly = Poly<Field>;
using FieldRF = RationalFunction<Field>;

class CurveError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct RamificationDatum {
    QuadExt t;
    // x - x_sigma = lambda^2 u^2 + O(u^3), u = t - t_sigma.
    QuadExt lambda_sq;
    Field lambda;
    // t - t_sigma as a series in zeta, with x = x_sigma + zeta^2.
    LocalSeries u_of_zeta;
    LocalSeries dt_dzeta;
    // y - y_sigma in zeta; h[k] is the coefficient of zeta^k.
    LocalSeries y_of_zeta;
    std::vector<Field> h;
};

// Genus-zero spectral curve in a global coordinate t with rational dx/dt, dy/dt, simple
// ramification points and B = dt1 dt2 / (t1 - t2)^2.
class GenusZeroCurve {
public:
    GenusZeroCurve(std::string name, FieldRF dx, FieldRF dy, std::vector<QuadExt> points, int local_order);

    const std::string& name() const { return name_; }
    int local_order() const { return order_; }
    size_t size() const { return points_.size(); }
    const RamificationDatum& point(size_t s) const { return points_.at(s); }
    const FieldRF& dx() const { return dx_; }
    const FieldRF& dy() const { return dy_; }
    std::shared_ptr<const RadicalContext> context() const { return ctx_; }

    // beta^m_sigma(p) = Res_{p' -> P_sigma} B(p, p') zeta_sigma(p')^{-m-1}; coefficient of dt.
    FieldRF beta_global(size_t sigma, int m) const;
    // Expansion of beta^m_sigma at P_at in zeta_at (coefficient of d zeta_at), known below local_order.
    LocalSeries beta_local(size_t sigma, int m, size_t at) const;
    // B(zeta_s, zeta_sp) = (delta / (zeta_s - zeta_sp)^2 + sum B_kl zeta_s^k zeta_sp^l) d zeta_s d zeta_sp.
    Field bergman_coeff(size_t s, size_t sp, int k, int l) const;
    // y(zeta) - y(-zeta) at P_s.
    LocalSeries delta_y(size_t s) const;
    Field h1(size_t s) const { return point(s).h.at(1); }

    // theta^d_sigma = -(2d-1)!! 2^{-d} beta^{2d}_sigma.
    static Rational theta_from_beta(int d);
    FieldRF theta_global(size_t sigma, int d) const;
    LocalSeries theta_local(size_t sigma, int d, size_t at) const;

    // The bidifferential in the global coordinate: coefficient of dt1 dt2.
    static std::string bergman_kernel_string() { return "1/(t1 - t2)^2"; }

private:
    const std::vector<Field>& principal_coeffs(size_t sigma, int m) const;
    const std::vector<LocalSeries>& inverse_powers(size_t sigma, size_t at) const;

    std::string name_;
    FieldRF dx_, dy_;
    int order_;
    std::shared_ptr<RadicalContext> ctx_;
    std::vector<RamificationDatum> points_;
    // S(u) with zeta = lambda u S(u), per point, and its reciprocal powers.
    std::vector<LocalSeries> scale_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<size_t, int>, std::vector<Field>> principal_;
    mutable std::map<std::pair<size_t, size_t>, std::vector<LocalSeries>> powers_;
    mutable std::map<std::tuple<size_t, int, size_t>, LocalSeries> beta_local_;
};

// Conversions between coefficient fields.
FieldPoly to_field_poly(const Poly<Rational>& p);
FieldRF to_field_rf(const RationalFunction<Rational>& f);
LocalSeries to_local(const LaurentSeries<Rational>& s);

}  // namespace mirror
