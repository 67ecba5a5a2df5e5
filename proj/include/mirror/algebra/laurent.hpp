#pragma once

#include "mirror/algebra/field.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirror {

// Univariate truncated Laurent series sum_{e < prec} c_e t^e over a field F.
// prec == kExact marks a finite exact expression (a Laurent polynomial).
template <class F>
class LaurentSeries {
public:
    static constexpr int kExact = 1 << 28;

    LaurentSeries() = default;
    LaurentSeries(int val, std::vector<F> coeffs, int prec = kExact)
        : val_(val), c_(std::move(coeffs)), prec_(prec) {
        normalize();
    }
    static LaurentSeries monomial(const F& c, int e, int prec = kExact) { return LaurentSeries(e, {c}, prec); }
    static LaurentSeries constant(const F& c, int prec = kExact) { return monomial(c, 0, prec); }
    // O(t^prec).
    static LaurentSeries big_o(int prec) {
        LaurentSeries r;
        r.prec_ = prec;
        return r;
    }

    int precision() const { return prec_; }
    bool is_exact() const { return prec_ >= kExact / 2; }
    bool empty() const { return c_.empty(); }
    // First exponent with a nonzero coefficient, or the precision if none is known.
    int valuation() const { return c_.empty() ? prec_ : val_; }
    // Largest exponent with stored coefficient.
    int degree() const { return val_ + static_cast<int>(c_.size()) - 1; }

    F coeff(int e) const {
        if (e >= prec_) throw std::domain_error("LaurentSeries: coefficient beyond precision");
        if (c_.empty() || e < val_ || e > degree()) return F(0);
        return c_[e - val_];
    }
    F leading() const {
        if (c_.empty()) throw std::domain_error("LaurentSeries: no known nonzero term");
        return c_.front();
    }

    LaurentSeries truncate(int prec) const {
        LaurentSeries r = *this;
        r.prec_ = std::min(prec_, prec);
        r.normalize();
        return r;
    }

    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = add(*this, o, false); }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = add(*this, o, true); }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = (*this * o); }
    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b, false); }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b, true); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        int prec = std::min(sat_add(a.prec_, b.valuation()), sat_add(b.prec_, a.valuation()));
        if (a.c_.empty() || b.c_.empty()) return big_o(prec);
        int lo = a.val_ + b.val_;
        int hi = std::min(a.degree() + b.degree(), prec - 1);
        if (hi < lo) return big_o(prec);
        std::vector<F> out(static_cast<size_t>(hi - lo + 1), F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            int ei = a.val_ + static_cast<int>(i);
            for (size_t j = 0; j < b.c_.size(); ++j) {
                int e = ei + b.val_ + static_cast<int>(j);
                if (e > hi) break;
                if (is_zero(b.c_[j])) continue;
                out[static_cast<size_t>(e - lo)] += a.c_[i] * b.c_[j];
            }
        }
        return LaurentSeries(lo, std::move(out), prec);
    }
    friend LaurentSeries operator*(const F& s, const LaurentSeries& a) {
        LaurentSeries r = a;
        for (auto& x : r.c_) x = s * x;
        r.normalize();
        return r;
    }
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.prec_ == b.prec_ && a.c_ == b.c_ && (a.c_.empty() || a.val_ == b.val_);
    }

    // Multiplicative inverse; an exact non-monomial input needs an explicit relative precision.
    LaurentSeries inverse(int rel_prec = -1) const {
        if (c_.empty()) throw std::domain_error("LaurentSeries: inverse of series with no known unit term");
        int v = val_;
        int rel = is_exact() ? rel_prec : prec_ - v;
        if (is_exact() && c_.size() == 1) return monomial(field_inverse(c_[0]), -v);
        if (rel < 0) throw std::domain_error("LaurentSeries: inverse of exact series needs a precision");
        F inv0 = field_inverse(c_[0]);
        std::vector<F> b(static_cast<size_t>(rel), F(0));
        for (int n = 0; n < rel; ++n) {
            F s = n == 0 ? F(1) : F(0);
            for (int i = 1; i <= n && i < static_cast<int>(c_.size()); ++i) s -= c_[i] * b[n - i];
            b[n] = s * inv0;
        }
        return LaurentSeries(-v, std::move(b), -v + rel);
    }

    LaurentSeries pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        LaurentSeries r = constant(F(1));
        LaurentSeries base = *this;
        while (n) {
            if (n & 1) r *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return r;
    }

    LaurentSeries derivative() const {
        std::vector<F> out;
        out.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) out.push_back(F(val_ + static_cast<long>(i)) * c_[i]);
        return LaurentSeries(val_ - 1, std::move(out), sat_add(prec_, -1));
    }

    // Termwise antiderivative with zero constant term; throws on a t^{-1} term.
    LaurentSeries integrate() const {
        std::vector<F> out;
        out.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            long e = val_ + static_cast<long>(i);
            if (e == -1) {
                if (!is_zero(c_[i])) throw std::domain_error("LaurentSeries: cannot integrate t^-1");
                out.push_back(F(0));
                continue;
            }
            out.push_back(c_[i] * field_inverse(F(e + 1)));
        }
        if (prec_ <= -1 && !c_.empty()) throw std::domain_error("LaurentSeries: residue term unknown");
        return LaurentSeries(val_ + 1, std::move(out), sat_add(prec_, 1));
    }

    // t -> c t.
    LaurentSeries scale_variable(const F& c) const {
        LaurentSeries r = *this;
        F pw = F(1);
        F cinv = F(1);
        if (val_ < 0) {
            cinv = field_inverse(c);
            for (int i = 0; i < -val_; ++i) pw *= cinv;
        } else {
            for (int i = 0; i < val_; ++i) pw *= c;
        }
        for (auto& x : r.c_) {
            x *= pw;
            pw *= c;
        }
        r.normalize();
        return r;
    }
    LaurentSeries negate_variable() const { return scale_variable(F(-1)); }

    // Multiply by t^s.
    LaurentSeries shift(int s) const {
        LaurentSeries r = *this;
        r.val_ += s;
        r.prec_ = sat_add(r.prec_, s);
        return r;
    }

    // this(inner(t)); inner must have positive valuation.
    LaurentSeries compose(const LaurentSeries& inner) const {
        int vi = inner.valuation();
        if (vi < 1 || vi >= kExact / 2)
            throw std::domain_error("LaurentSeries: composition needs inner series of positive valuation");
        int prec = is_exact() ? kExact : sat_mul(prec_, vi);
        LaurentSeries acc = big_o(prec);
        if (c_.empty()) return acc;
        LaurentSeries pw;
        if (val_ >= 0) {
            pw = inner.pow(val_);
        } else {
            if (inner.is_exact() && inner.c_.size() > 1 && prec >= kExact / 2)
                throw std::domain_error("LaurentSeries: exact composition with poles");
            int rel = prec >= kExact / 2 ? -1 : prec - val_ * vi;
            pw = inner.inverse(rel).pow(-val_);
        }
        for (size_t i = 0; i < c_.size(); ++i) {
            if (!is_zero(c_[i])) acc += c_[i] * pw;
            if (i + 1 < c_.size()) pw = (pw * inner).truncate(prec);
        }
        return acc.truncate(prec);
    }

    // Compositional inverse of s(t) = c1 t + c2 t^2 + ... ; returns t(s).
    LaurentSeries reversion() const {
        if (valuation() != 1) throw std::domain_error("LaurentSeries: reversion needs a nonzero linear term and no constant term");
        int prec = is_exact() ? kExact : prec_;
        if (prec >= kExact / 2) throw std::domain_error("LaurentSeries: reversion of exact series needs a precision");
        F inv1 = field_inverse(c_[0]);
        // Newton iteration t <- t - (f(t) - s) / f'(t), doubling the known order each step.
        LaurentSeries f = truncate(prec);
        LaurentSeries df = f.derivative();
        LaurentSeries s = monomial(F(1), 1);
        int known = 2;
        LaurentSeries t = monomial(inv1, 1, std::min(known, prec));
        while (known < prec) {
            known = std::min(2 * known, prec);
            LaurentSeries tk = LaurentSeries(t.val_, t.c_, known);
            LaurentSeries resid = (f.compose(tk) - s).truncate(known);
            LaurentSeries slope = df.compose(tk).truncate(known - 1);
            t = (tk - resid * slope.inverse()).truncate(known);
        }
        return t;
    }

    // Square root of a series 1 + O(t); the branch with constant term 1.
    LaurentSeries sqrt_one_plus() const {
        if (valuation() < 0 || coeff(0) != F(1))
            throw std::domain_error("LaurentSeries: sqrt needs constant term 1");
        if (is_exact()) throw std::domain_error("LaurentSeries: sqrt of exact series needs a precision");
        int n = prec_;
        std::vector<F> g(static_cast<size_t>(std::max(n, 0)), F(0));
        F half = field_inverse(F(2));
        for (int m = 0; m < n; ++m) {
            if (m == 0) {
                g[0] = F(1);
                continue;
            }
            F s = coeff(m);
            for (int i = 1; i < m; ++i) s -= g[i] * g[m - i];
            g[m] = s * half;
        }
        return LaurentSeries(0, std::move(g), n);
    }

    const std::vector<F>& coefficients() const { return c_; }
    int low() const { return val_; }

    std::string to_string(const std::string& var = "t") const {
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + field_string(c_[i]) + ")*" + var + "^" + std::to_string(val_ + static_cast<int>(i));
        }
        if (!is_exact()) s += (s.empty() ? "" : " + ") + std::string("O(") + var + "^" + std::to_string(prec_) + ")";
        return s.empty() ? "0" : s;
    }

    static int sat_add(int a, int b) {
        if (a >= kExact / 2) return kExact;
        long s = static_cast<long>(a) + b;
        return s >= kExact / 2 ? kExact : static_cast<int>(s);
    }
    static int sat_mul(int a, int b) {
        if (a >= kExact / 2) return kExact;
        long s = static_cast<long>(a) * b;
        return s >= kExact / 2 ? kExact : static_cast<int>(s);
    }

private:
    static LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b, bool sub) {
        int prec = std::min(a.prec_, b.prec_);
        if (a.c_.empty() && b.c_.empty()) return big_o(prec);
        int lo = a.c_.empty() ? b.val_ : (b.c_.empty() ? a.val_ : std::min(a.val_, b.val_));
        int hi = std::max(a.c_.empty() ? lo : a.degree(), b.c_.empty() ? lo : b.degree());
        hi = std::min(hi, prec - 1);
        if (hi < lo) return big_o(prec);
        std::vector<F> out(static_cast<size_t>(hi - lo + 1), F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            int e = a.val_ + static_cast<int>(i);
            if (e <= hi) out[e - lo] += a.c_[i];
        }
        for (size_t i = 0; i < b.c_.size(); ++i) {
            int e = b.val_ + static_cast<int>(i);
            if (e > hi) continue;
            if (sub)
                out[e - lo] -= b.c_[i];
            else
                out[e - lo] += b.c_[i];
        }
        return LaurentSeries(lo, std::move(out), prec);
    }

    void normalize() {
        if (prec_ >= kExact / 2) prec_ = kExact;
        // Drop terms beyond the precision.
        if (!c_.empty()) {
            long keep = static_cast<long>(prec_) - val_;
            if (keep < 0) keep = 0;
            if (static_cast<long>(c_.size()) > keep) c_.resize(static_cast<size_t>(keep));
        }
        size_t lead = 0;
        while (lead < c_.size() && is_zero(c_[lead])) ++lead;
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<int>(lead);
        }
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
        if (c_.empty()) val_ = 0;
    }

    int val_ = 0;
    std::vector<F> c_;
    int prec_ = kExact;
};

}  // namespace mirror
