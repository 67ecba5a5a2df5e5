#pragma once

#include "mirror/algebra/quad_ext.hpp"
#include "mirror/algebra/radical.hpp"
#include "mirror/algebra/rational.hpp"

#include <string>

namespace mirror {

// Uniform helpers so the univariate templates work over every coefficient field.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline bool is_zero(const RadicalNumber& x) { return x.is_zero(); }

inline Rational field_inverse(const Rational& x) {
    if (sgn(x) == 0) throw std::domain_error("division by zero");
    return Rational(1) / x;
}
inline QuadExt field_inverse(const QuadExt& x) { return x.inverse(); }
inline RadicalNumber field_inverse(const RadicalNumber& x) { return x.inverse(); }

inline std::string field_string(const Rational& x) { return to_string(x); }
inline std::string field_string(const QuadExt& x) { return x.to_string(); }
inline std::string field_string(const RadicalNumber& x) { return x.to_string(); }

}  // namespace mirror
