#include "mirror/algebra/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace mirror {

const Poly<Rational>& cyclotomic_polynomial(int n) {
    static std::mutex mu;
    static std::map<int, Poly<Rational>> cache;
    if (n < 1) throw std::domain_error("cyclotomic polynomial of order < 1");
    std::lock_guard<std::mutex> lock(mu);
    // x^d - 1 = prod_{e | d} Phi_e; fill divisors of n in increasing order.
    for (int d = 1; d <= n; ++d) {
        if (n % d || cache.count(d)) continue;
        std::vector<Rational> c(static_cast<size_t>(d + 1), Rational(0));
        c[0] = -1;
        c[static_cast<size_t>(d)] = 1;
        Poly<Rational> acc(c);
        for (int e = 1; e < d; ++e)
            if (d % e == 0) acc = Poly<Rational>::divmod(acc, cache.at(e)).first;
        cache.emplace(d, acc);
    }
    return cache.at(n);
}

CyclotomicNumber::CyclotomicNumber(int n, const Rational& c) : n_(n), r_(c) {
    if (n < 1) throw std::domain_error("CyclotomicNumber: order must be positive");
}

CyclotomicNumber CyclotomicNumber::root_power(int n, long e) {
    CyclotomicNumber r(n, Rational(0));
    long k = pos_mod(e, n);
    std::vector<Rational> c(static_cast<size_t>(k + 1), Rational(0));
    c[static_cast<size_t>(k)] = 1;
    r.r_ = Poly<Rational>(c);
    r.reduce();
    return r;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("CyclotomicNumber: value is not rational");
    return r_.coeff(0);
}

void CyclotomicNumber::check(const CyclotomicNumber& o) const {
    if (n_ != o.n_) throw std::domain_error("CyclotomicNumber: mismatched orders");
}

void CyclotomicNumber::reduce() { r_ = Poly<Rational>::divmod(r_, cyclotomic_polynomial(n_)).second; }

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    check(o);
    r_ += o.r_;
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    check(o);
    r_ -= o.r_;
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    check(o);
    r_ *= o.r_;
    reduce();
    return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    r.r_ = -r.r_;
    return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a.n_ == b.n_ && a.r_ == b.r_; }

std::string CyclotomicNumber::to_string() const { return r_.to_string("w"); }

}  // namespace mirror
