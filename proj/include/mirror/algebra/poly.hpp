#pragma once

#include "mirror/algebra/field.hpp"
#include "mirror/algebra/laurent.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mirror {

// Dense univariate polynomial, coefficients from low to high degree.
template <class F>
class Poly {
public:
    Poly() = default;
    Poly(const F& c) : c_{c} { trim(); }
    explicit Poly(std::vector<F> c) : c_(std::move(c)) { trim(); }
    static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }
    // t - a.
    static Poly linear_root(const F& a) { return Poly(std::vector<F>{-a, F(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    F coeff(int i) const { return i < 0 || i >= static_cast<int>(c_.size()) ? F(0) : c_[i]; }
    F leading() const { return c_.empty() ? F(0) : c_.back(); }
    const std::vector<F>& coefficients() const { return c_; }

    F operator()(const F& t) const {
        F r = F(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly();
        std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const F& s) const {
        Poly r = *this;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    // Quotient and remainder.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.c_.empty()) throw std::domain_error("Poly: division by zero polynomial");
        if (a.degree() < b.degree()) return {Poly(), a};
        std::vector<F> rem = a.c_;
        std::vector<F> q(a.c_.size() - b.c_.size() + 1, F(0));
        F inv = field_inverse(b.leading());
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            F f = rem[static_cast<size_t>(i + b.degree())] * inv;
            q[static_cast<size_t>(i)] = f;
            if (is_zero(f)) continue;
            for (int j = 0; j <= b.degree(); ++j) rem[static_cast<size_t>(i + j)] -= f * b.c_[static_cast<size_t>(j)];
        }
        return {Poly(std::move(q)), Poly(std::move(rem))};
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        return scaled(field_inverse(leading()));
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.c_.empty()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> out(c_.size() - 1, F(0));
        for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = F(static_cast<long>(i)) * c_[i];
        return Poly(std::move(out));
    }

    // p(a + u) as a polynomial in u.
    Poly taylor_shift(const F& a) const {
        Poly r;
        Poly base(std::vector<F>{a, F(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * base + Poly(*it);
        return r;
    }

    // Multiplicity of a as a root.
    int root_multiplicity(const F& a) const {
        if (c_.empty()) throw std::domain_error("Poly: zero polynomial has every root");
        Poly s = taylor_shift(a);
        int m = 0;
        while (m < static_cast<int>(s.c_.size()) && is_zero(s.c_[static_cast<size_t>(m)])) ++m;
        return m;
    }

    std::string to_string(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + field_string(c_[i]) + ")";
            if (i) s += "*" + var + "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

// num/den with gcd removed and monic denominator.
template <class F>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(F(1)) {}
    RationalFunction(const F& c) : num_(c), den_(F(1)) {}
    RationalFunction(Poly<F> num, Poly<F> den = Poly<F>(F(1))) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }
    static RationalFunction x() { return RationalFunction(Poly<F>::x()); }

    const Poly<F>& numerator() const { return num_; }
    const Poly<F>& denominator() const { return den_; }
    bool is_zero_function() const { return num_.is_zero_poly(); }

    F operator()(const F& t) const {
        F d = den_(t);
        if (is_zero(d)) throw std::domain_error("RationalFunction: evaluation at a pole");
        return num_(t) * field_inverse(d);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero_poly()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Laurent expansion in u = t - a, known to O(u^prec).
    LaurentSeries<F> laurent_at(const F& a, int prec) const {
        if (num_.is_zero_poly()) return LaurentSeries<F>::big_o(prec);
        Poly<F> n = num_.taylor_shift(a);
        Poly<F> d = den_.taylor_shift(a);
        int m = 0;
        while (is_zero(d.coeff(m))) ++m;
        LaurentSeries<F> ds(0, std::vector<F>(d.coefficients().begin() + m, d.coefficients().end()));
        LaurentSeries<F> ns(0, n.coefficients());
        // n/d = u^{-m} n / ds; ds has a unit constant term.
        int rel = prec + m;
        if (rel <= 0) return LaurentSeries<F>::big_o(prec);
        LaurentSeries<F> inv = ds.inverse(rel);
        return (ns.truncate(rel) * inv).truncate(rel).shift(-m);
    }

    // Residue of f(t) dt at t = a (zero at regular points).
    F residue(const F& a) const { return laurent_at(a, 0).coeff(-1); }

    std::string to_string(const std::string& var = "t") const {
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void reduce() {
        if (den_.is_zero_poly()) throw std::domain_error("RationalFunction: zero denominator");
        if (num_.is_zero_poly()) {
            den_ = Poly<F>(F(1));
            return;
        }
        Poly<F> g = Poly<F>::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly<F>::divmod(num_, g).first;
            den_ = Poly<F>::divmod(den_, g).first;
        }
        F lc = field_inverse(den_.leading());
        num_ = num_.scaled(lc);
        den_ = den_.scaled(lc);
    }

    Poly<F> num_;
    Poly<F> den_;
};

}  // namespace mirror
