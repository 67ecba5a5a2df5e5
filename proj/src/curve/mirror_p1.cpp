#include "mirror/curve/mirror_p1.hpp"

#include <algorithm>

namespace mirror {

namespace {

using RF = RationalFunction<Rational>;
using RPoly = Poly<Rational>;

// c / (V - a).
RF simple_pole(const Rational& c, const Rational& a) { return RF(RPoly(c), RPoly::linear_root(a)); }

}  // namespace

MirrorCurveP1 mirror_curve_p1(const KnotParams& kp, const Rational& q) {
    if (kp.p != 1) throw CurveError("the genus-zero engine needs p = 1");
    if (q == 0) throw CurveError("degenerate curve: q = 0");
    MirrorCurveP1 c{kp, q, 0, 0, 0, 0};
    long s = kp.k - kp.r;
    c.qa = s;
    c.qb = Rational(s) * (1 + q) + Rational(kp.r) * (1 - q);
    c.qc = Rational(s) * q;
    c.discriminant = c.qb * c.qb - 4 * c.qa * c.qc;
    if (c.discriminant == 0) throw CurveError("degenerate curve: coincident ramification points");
    for (const auto& v : ramification_points(c)) {
        for (const Rational& bad : {Rational(0), Rational(-1), Rational(-q)})
            if (v == QuadExt(bad)) throw CurveError("degenerate curve: ramification point at a puncture");
    }
    return c;
}

std::vector<QuadExt> ramification_points(const MirrorCurveP1& c) {
    QuadExt root = QuadExt::sqrt_of(c.discriminant);
    // Sign of the root chosen so that point 0 is the branch away from V = 0 near q = 0.
    QuadExt sgn = c.qb >= 0 ? QuadExt(1) : QuadExt(-1);
    QuadExt inv = QuadExt(Rational(1) / (2 * c.qa));
    QuadExt v0 = (QuadExt(-c.qb) - sgn * root) * inv;
    QuadExt v1 = (QuadExt(-c.qb) + sgn * root) * inv;
    return {v0, v1};
}

RationalFunction<Rational> dx_dV(const MirrorCurveP1& c) {
    const auto& kp = c.kp;
    return simple_pole(kp.k - kp.r, 0) + simple_pole(-kp.r, -1) + simple_pole(kp.r, -c.q);
}

RationalFunction<Rational> dy_dV(const MirrorCurveP1& c) {
    const auto& kp = c.kp;
    // -gamma (1/V + 1/(V+1) - 1/(V+q)) - delta / V.
    return simple_pole(-kp.gamma - kp.delta, 0) + simple_pole(-kp.gamma, -1) + simple_pole(kp.gamma, -c.q);
}

GenusZeroCurve make_spectral_curve(const MirrorCurveP1& c, int local_order) {
    return GenusZeroCurve("p1(" + c.kp.to_string() + ",q=" + to_string(c.q) + ")", to_field_rf(dx_dV(c)),
                          to_field_rf(dy_dV(c)), ramification_points(c), local_order);
}

GenusZeroCurve airy_curve(int local_order) {
    FieldRF dx(FieldPoly(std::vector<Field>{Field(0), Field(2)}));
    FieldRF dy(Field(1));
    return GenusZeroCurve("airy", dx, dy, {QuadExt(0)}, local_order);
}

GenusZeroCurve limit_curve_p1(const KnotParams& kp, int point, int local_order) {
    if (kp.p != 1) throw CurveError("the genus-zero engine needs p = 1");
    long s = kp.k - kp.r;
    if (point == 0) {
        // dx = k/V - r/(V+1), U -> -(V+1).
        RF dx = simple_pole(kp.k, 0) + simple_pole(-kp.r, -1);
        RF dy = simple_pole(-kp.delta, 0) + simple_pole(-kp.gamma, -1);
        return GenusZeroCurve("p1-limit0", to_field_rf(dx), to_field_rf(dy), {QuadExt(frac(-kp.k, s))},
                              local_order);
    }
    if (point == 1) {
        // V = q W, dx = s/W + r/(W+1), U -> -W/(W+1).
        RF dx = simple_pole(s, 0) + simple_pole(kp.r, -1);
        RF dy = simple_pole(-kp.gamma - kp.delta, 0) + simple_pole(kp.gamma, -1);
        return GenusZeroCurve("p1-limit1", to_field_rf(dx), to_field_rf(dy), {QuadExt(frac(-s, kp.k))},
                              local_order);
    }
    throw CurveError("limit curve index must be 0 or 1");
}

int local_order_for(int g, int n, int z_order) {
    int m = std::max(0, 6 * g - 6 + 2 * n);
    return std::max(2 * m + 10, 2 * z_order + 4);
}

}  // namespace mirror
