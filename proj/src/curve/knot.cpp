#include "mirror/curve/knot.hpp"

#include "mirror/algebra/rational.hpp"

namespace mirror {

std::string KnotParams::to_string() const {
    return "(p=" + std::to_string(p) + ", r=" + std::to_string(r) + ", s=" + std::to_string(s) +
           ", k=" + std::to_string(k) + ", gamma=" + std::to_string(gamma) + ", delta=" + std::to_string(delta) + ")";
}

KnotParams validate_knot(long p, long r, long s) {
    if (p <= 0 || r <= 0 || s <= 0) throw KnotError("p, r, s must be positive");
    if ((r + s) % p != 0) throw KnotError("r+s not divisible by p");
    if (gcd_long(p, r) != 1 || gcd_long(p, s) != 1 || gcd_long(r, s) != 1)
        throw KnotError("p, r, s must be pairwise coprime");
    KnotParams kp;
    kp.p = p;
    kp.r = r;
    kp.s = s;
    kp.k = (r + s) / p;
    // k gamma = 1 mod r has a unique solution in [0, r).
    for (long g = 0; g < r || (r == 1 && g == 0); ++g) {
        if (pos_mod(kp.k * g - 1, r) == 0) {
            kp.gamma = g;
            kp.delta = (1 - kp.k * g) / r;
            return kp;
        }
    }
    throw KnotError("no framing completion exists");
}

}  // namespace mirror
