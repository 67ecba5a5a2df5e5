#pragma once

#include <doctest.h>

#include "mirror/algebra/laurent.hpp"
#include "mirror/algebra/quad_ext.hpp"
#include "mirror/algebra/radical.hpp"
#include "mirror/algebra/rational.hpp"
#include "mirror/algebra/series.hpp"

namespace doctest {
template <>
struct StringMaker<mirror::Rational> {
    static String convert(const mirror::Rational& x) { return mirror::to_string(x).c_str(); }
};
template <>
struct StringMaker<mirror::QuadExt> {
    static String convert(const mirror::QuadExt& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<mirror::RadicalNumber> {
    static String convert(const mirror::RadicalNumber& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<mirror::PhasedSeries> {
    static String convert(const mirror::PhasedSeries& x) { return x.to_string().c_str(); }
};
template <class F>
struct StringMaker<mirror::LaurentSeries<F>> {
    static String convert(const mirror::LaurentSeries<F>& x) { return x.to_string().c_str(); }
};
}  // namespace doctest
