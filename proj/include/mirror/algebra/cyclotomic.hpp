#pragma once

#include "mirror/algebra/poly.hpp"
#include "mirror/algebra/rational.hpp"

#include <string>

namespace mirror {

// Element of Q(w), w = exp(2 pi i / n), reduced modulo the n-th cyclotomic polynomial.
class CyclotomicNumber {
public:
    CyclotomicNumber() : CyclotomicNumber(1, Rational(0)) {}
    CyclotomicNumber(int n, const Rational& c);
    // w^e.
    static CyclotomicNumber root_power(int n, long e);

    int order() const { return n_; }
    bool is_zero() const { return r_.is_zero_poly(); }
    bool is_rational() const { return r_.degree() <= 0; }
    Rational rational_value() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    // Sign-free string in powers of w.
    std::string to_string() const;

private:
    void check(const CyclotomicNumber& o) const;
    void reduce();

    int n_ = 1;
    Poly<Rational> r_;
};

// n-th cyclotomic polynomial over Q.
const Poly<Rational>& cyclotomic_polynomial(int n);

}  // namespace mirror
