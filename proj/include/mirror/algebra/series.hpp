#pragma once

#include "mirror/algebra/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mirror {

struct SeriesVar {
    std::string name;
    int min_exp = 0;
    int max_exp = 0;
    bool operator==(const SeriesVar&) const = default;
};

// Stored coefficient c of q^a eta^e stands for c * zeta^(k * sum e_eta) * (-1)^(a_q1),
// zeta = exp(i pi / r). With no eta variables and no q1 the rule is inactive.
struct PhaseRule {
    long k = 0;
    long r = 1;
    std::vector<int> eta;
    int q1 = -1;
    bool active() const { return !eta.empty() || q1 >= 0; }
    bool operator==(const PhaseRule&) const = default;
};

struct SeriesLayout {
    std::vector<SeriesVar> vars;
    // Optional bound on the total degree in the listed variables.
    std::vector<int> capped;
    int cap = -1;
    PhaseRule phase;

    int index(const std::string& name) const;
    bool operator==(const SeriesLayout&) const = default;
};

using LayoutPtr = std::shared_ptr<const SeriesLayout>;
LayoutPtr make_layout(SeriesLayout layout);

// Sparse truncated multivariate series over Q with optional phase grading.
// Up to 8 variables, exponents in [-64, 191].
class PhasedSeries {
public:
    using Key = std::uint64_t;
    using Exponents = std::vector<int>;

    PhasedSeries() = default;
    explicit PhasedSeries(LayoutPtr layout) : layout_(std::move(layout)) {}
    static PhasedSeries constant(LayoutPtr layout, const Rational& c);
    static PhasedSeries variable(LayoutPtr layout, int index);
    static PhasedSeries monomial(LayoutPtr layout, const Exponents& e, const Rational& c);

    const SeriesLayout& layout() const { return *layout_; }
    const LayoutPtr& layout_ptr() const { return layout_; }
    size_t nvars() const { return layout_->vars.size(); }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Exponents& e) const;
    Rational constant_term() const;
    // Adds c to the coefficient of e; silently drops monomials outside the truncation.
    void add_term(const Exponents& e, const Rational& c);
    bool in_bounds(const Exponents& e) const;
    // Terms in increasing lexicographic exponent order.
    std::vector<std::pair<Exponents, Rational>> terms() const;
    void for_each(const std::function<void(const Exponents&, const Rational&)>& fn) const;

    PhasedSeries& operator+=(const PhasedSeries& o);
    PhasedSeries& operator-=(const PhasedSeries& o);
    PhasedSeries& operator*=(const PhasedSeries& o) { return *this = *this * o; }
    PhasedSeries operator-() const;
    friend PhasedSeries operator+(PhasedSeries a, const PhasedSeries& b) { return a += b; }
    friend PhasedSeries operator-(PhasedSeries a, const PhasedSeries& b) { return a -= b; }
    friend PhasedSeries operator*(const PhasedSeries& a, const PhasedSeries& b);
    friend PhasedSeries operator/(const PhasedSeries& a, const PhasedSeries& b) { return a * b.inverse(); }
    friend bool operator==(const PhasedSeries& a, const PhasedSeries& b);
    friend bool operator!=(const PhasedSeries& a, const PhasedSeries& b) { return !(a == b); }

    PhasedSeries scaled(const Rational& s) const;
    PhasedSeries pow(long n) const;
    // 1/f for f with nonzero constant term.
    PhasedSeries inverse() const;
    // exp(f) for f with zero constant term.
    PhasedSeries exp() const;
    // log(f) for f with constant term 1.
    PhasedSeries log() const;
    // Substitutes g (zero constant term) for variable i.
    PhasedSeries compose(int i, const PhasedSeries& g) const;
    PhasedSeries derive(int i) const;
    // Termwise antiderivative in variable i; throws on exponent -1.
    PhasedSeries integrate(int i) const;
    // x_i d/dx_i.
    PhasedSeries euler(int i) const;
    // Multiplies by x_i^s.
    PhasedSeries shift(int i, int s) const;
    // Sets variable i to a rational value (its exponents become zero).
    PhasedSeries specialize(int i, const Rational& value) const;
    // Keeps monomials whose exponents in the listed variables are all divisible by r.
    PhasedSeries h_project(long r, const std::vector<int>& vars) const;
    // Actual rational coefficients; every eta exponent must be divisible by r. Eta variables are
    // replaced by X = eta^r under the given names (empty keeps the old names).
    PhasedSeries dephase(const std::vector<std::string>& x_names = {}) const;
    // Re-truncates into another layout with the same variable names.
    PhasedSeries restrict_to(LayoutPtr layout) const;

    std::string monomial_string(const Exponents& e) const;
    std::string to_string() const;
    std::string to_tsv() const;
    std::string to_json() const;
    static PhasedSeries from_json(const std::string& text);

    // First monomial (in exponent order) where the two series differ.
    static std::optional<Exponents> first_difference(const PhasedSeries& a, const PhasedSeries& b);

private:
    static constexpr int kOffset = 64;
    Key pack(const Exponents& e) const;
    Exponents unpack(Key k) const;
    void require_compatible(const PhasedSeries& o) const;

    LayoutPtr layout_;
    std::map<Key, Rational> terms_;
};

}  // namespace mirror
