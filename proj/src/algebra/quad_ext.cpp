#include "mirror/algebra/quad_ext.hpp"

#include <stdexcept>

namespace mirror {

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b) {
    if (b_ != 0) d_ = std::make_shared<const Rational>(d);
    normalize();
}

QuadExt QuadExt::sqrt_of(const Rational& d) { return QuadExt(0, 1, d); }

void QuadExt::normalize() {
    if (b_ == 0) {
        d_.reset();
        return;
    }
    Rational root;
    if (rational_sqrt(*d_, root)) {
        a_ += b_ * root;
        b_ = 0;
        d_.reset();
    }
}

void QuadExt::absorb(const QuadExt& o) {
    if (!o.d_) return;
    if (!d_) {
        d_ = o.d_;
        return;
    }
    if (d_ != o.d_ && *d_ != *o.d_) throw std::domain_error("QuadExt: mixing different discriminants");
}

QuadExt QuadExt::conj() const {
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational QuadExt::norm() const {
    if (b_ == 0) return a_ * a_;
    return a_ * a_ - b_ * b_ * (*d_);
}

QuadExt QuadExt::inverse() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("QuadExt: division by zero");
    QuadExt r = conj();
    r.a_ /= n;
    r.b_ /= n;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    absorb(o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_ == 0) d_.reset();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    absorb(o);
    a_ -= o.a_;
    b_ -= o.b_;
    if (b_ == 0) d_.reset();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    if (b_ == 0 && o.b_ == 0) {
        a_ *= o.a_;
        return *this;
    }
    absorb(o);
    Rational na = a_ * o.a_ + b_ * o.b_ * (*d_);
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    if (b_ == 0) d_.reset();
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    if (x.b_ == 0) return true;
    return *x.d_ == *y.d_;
}

std::string QuadExt::to_string() const {
    if (b_ == 0) return mirror::to_string(a_);
    std::string s;
    if (a_ != 0) s = mirror::to_string(a_);
    if (b_ < 0)
        s += "-";
    else if (!s.empty())
        s += "+";
    Rational ab = abs(b_);
    if (ab != 1) s += mirror::to_string(ab) + "*";
    s += "sqrt(" + mirror::to_string(*d_) + ")";
    return s;
}

std::string to_string(const QuadExt& x) { return x.to_string(); }

}  // namespace mirror
