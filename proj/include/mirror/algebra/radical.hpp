#pragma once

#include "mirror/algebra/quad_ext.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mirror {

// Formal square roots g_i with g_i^2 = squares[i] in QuadExt.
struct RadicalContext {
    std::vector<std::string> names;
    std::vector<QuadExt> squares;
};

// Element of QuadExt[g_1..g_m]/(g_i^2 - s_i), stored sparsely by generator
// mask. Equalities proven here hold under every choice of signs of the g_i.
class RadicalNumber {
public:
    using Term = std::pair<std::uint32_t, QuadExt>;

    RadicalNumber() = default;
    RadicalNumber(long a) : RadicalNumber(QuadExt(a)) {}
    RadicalNumber(const Rational& a) : RadicalNumber(QuadExt(a)) {}
    RadicalNumber(const QuadExt& a);

    static RadicalNumber generator(std::shared_ptr<const RadicalContext> ctx, int index);
    static RadicalNumber monomial(std::shared_ptr<const RadicalContext> ctx, std::uint32_t mask, const QuadExt& c);

    const std::vector<Term>& terms() const { return terms_; }
    const std::shared_ptr<const RadicalContext>& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_base() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    // Value in QuadExt; throws unless is_base().
    QuadExt base_value() const;
    // Coefficient of the given generator mask (zero if absent).
    QuadExt coefficient(std::uint32_t mask) const;

    RadicalNumber inverse() const;

    RadicalNumber& operator+=(const RadicalNumber& o);
    RadicalNumber& operator-=(const RadicalNumber& o);
    RadicalNumber& operator*=(const RadicalNumber& o);
    RadicalNumber& operator/=(const RadicalNumber& o) { return *this *= o.inverse(); }
    RadicalNumber operator-() const;

    friend RadicalNumber operator+(RadicalNumber x, const RadicalNumber& y) { return x += y; }
    friend RadicalNumber operator-(RadicalNumber x, const RadicalNumber& y) { return x -= y; }
    friend RadicalNumber operator*(const RadicalNumber& x, const RadicalNumber& y);
    friend RadicalNumber operator/(RadicalNumber x, const RadicalNumber& y) { return x /= y; }
    friend bool operator==(const RadicalNumber& x, const RadicalNumber& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const RadicalNumber& x, const RadicalNumber& y) { return !(x == y); }

    std::string to_string() const;

private:
    void absorb(const RadicalNumber& o);
    // Sign-flip conjugation of generator i.
    RadicalNumber flip(int i) const;

    std::vector<Term> terms_;
    std::shared_ptr<const RadicalContext> ctx_;
};

std::string to_string(const RadicalNumber& x);

}  // namespace mirror
