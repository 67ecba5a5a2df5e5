#pragma once

#include "mirror/algebra/rational.hpp"

#include <memory>
#include <string>

namespace mirror {

// a + b*sqrt(D) over the rationals. Elements with b = 0 carry no discriminant
// and mix freely; two irrational elements must share the same D.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long a) : a_(a) {}
    QuadExt(const Rational& a) : a_(a) {}
    QuadExt(const Rational& a, const Rational& b, const Rational& d);

    static QuadExt sqrt_of(const Rational& d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    Rational discriminant() const { return d_ ? *d_ : Rational(0); }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadExt conj() const;
    Rational norm() const;
    QuadExt inverse() const;

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);
    QuadExt operator-() const;

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y);
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // "a", or "a+b*sqrt(D)" with rationals printed as n or n/d.
    std::string to_string() const;

private:
    void absorb(const QuadExt& o);
    void normalize();

    Rational a_, b_;
    std::shared_ptr<const Rational> d_;
};

std::string to_string(const QuadExt& x);

}  // namespace mirror
