#pragma once

#include "mirror/curve/knot.hpp"
#include "mirror/curve/spectral.hpp"

#include <string>
#include <vector>

namespace mirror {

// p = 1 mirror curve U V + V^2 + V + q U = 0 in the global coordinate V, with
// U = -V(V+1)/(V+q), x = -log X = -r log U + k log V, y = -log Y = -gamma log U - delta log V.
struct MirrorCurveP1 {
    KnotParams kp;
    Rational q;
    // Ramification quadratic a V^2 + b V + c = 0.
    Rational qa, qb, qc;
    Rational discriminant;
};

// Throws CurveError with "degenerate" in the message when q lies on the degeneration locus.
MirrorCurveP1 mirror_curve_p1(const KnotParams& kp, const Rational& q);
// Root 0 stays at V = -k/s as q -> 0; root 1 tends to V = 0.
std::vector<QuadExt> ramification_points(const MirrorCurveP1& c);
RationalFunction<Rational> dx_dV(const MirrorCurveP1& c);
RationalFunction<Rational> dy_dV(const MirrorCurveP1& c);
GenusZeroCurve make_spectral_curve(const MirrorCurveP1& c, int local_order);

// x = t^2, y = t.
GenusZeroCurve airy_curve(int local_order);

// The q -> 0 limits of the p = 1 curve near each ramification point: near root 0 in V, and
// near root 1 in W = V / q. Each has a single ramification point.
GenusZeroCurve limit_curve_p1(const KnotParams& kp, int point, int local_order);

// Local order needed for omega_{g,n} and for z-order N of the R-check matrix.
int local_order_for(int g, int n, int z_order);

}  // namespace mirror
