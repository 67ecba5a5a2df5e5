#include "mirror/algebra/radical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mirror {

RadicalNumber::RadicalNumber(const QuadExt& a) {
    if (!a.is_zero()) terms_.emplace_back(0u, a);
}

RadicalNumber RadicalNumber::generator(std::shared_ptr<const RadicalContext> ctx, int index) {
    return monomial(std::move(ctx), 1u << index, QuadExt(1));
}

RadicalNumber RadicalNumber::monomial(std::shared_ptr<const RadicalContext> ctx, std::uint32_t mask,
                                      const QuadExt& c) {
    RadicalNumber r;
    r.ctx_ = std::move(ctx);
    if (!c.is_zero()) r.terms_.emplace_back(mask, c);
    return r;
}

QuadExt RadicalNumber::base_value() const {
    if (!is_base()) throw std::domain_error("RadicalNumber: value has radical part " + to_string());
    return terms_.empty() ? QuadExt(0) : terms_[0].second;
}

QuadExt RadicalNumber::coefficient(std::uint32_t mask) const {
    for (const auto& t : terms_)
        if (t.first == mask) return t.second;
    return QuadExt(0);
}

void RadicalNumber::absorb(const RadicalNumber& o) {
    if (!o.ctx_) return;
    if (!ctx_) {
        ctx_ = o.ctx_;
        return;
    }
    if (ctx_ != o.ctx_) throw std::domain_error("RadicalNumber: mixing radical contexts");
}

static void merge_add(std::vector<RadicalNumber::Term>& out, const std::vector<RadicalNumber::Term>& a,
                      const std::vector<RadicalNumber::Term>& b, bool subtract) {
    out.clear();
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
            ++j;
        } else {
            QuadExt s = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& o) {
    absorb(o);
    std::vector<Term> out;
    merge_add(out, terms_, o.terms_, false);
    terms_.swap(out);
    return *this;
}

RadicalNumber& RadicalNumber::operator-=(const RadicalNumber& o) {
    absorb(o);
    std::vector<Term> out;
    merge_add(out, terms_, o.terms_, true);
    terms_.swap(out);
    return *this;
}

RadicalNumber operator*(const RadicalNumber& x, const RadicalNumber& y) {
    RadicalNumber r;
    r.ctx_ = x.ctx_ ? x.ctx_ : y.ctx_;
    if (x.ctx_ && y.ctx_ && x.ctx_ != y.ctx_) throw std::domain_error("RadicalNumber: mixing radical contexts");
    if (x.terms_.empty() || y.terms_.empty()) return r;
    if (x.terms_.size() == 1 && y.terms_.size() == 1 && x.terms_[0].first == 0 && y.terms_[0].first == 0) {
        r.terms_.emplace_back(0u, x.terms_[0].second * y.terms_[0].second);
        return r;
    }
    std::map<std::uint32_t, QuadExt> acc;
    for (const auto& [ma, ca] : x.terms_) {
        for (const auto& [mb, cb] : y.terms_) {
            QuadExt c = ca * cb;
            std::uint32_t common = ma & mb;
            for (int i = 0; common; ++i, common >>= 1)
                if (common & 1u) c *= r.ctx_->squares.at(i);
            acc[ma ^ mb] += c;
        }
    }
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(m, c);
    return r;
}

RadicalNumber& RadicalNumber::operator*=(const RadicalNumber& o) {
    *this = *this * o;
    return *this;
}

RadicalNumber RadicalNumber::operator-() const {
    RadicalNumber r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

RadicalNumber RadicalNumber::flip(int i) const {
    RadicalNumber r = *this;
    for (auto& t : r.terms_)
        if (t.first & (1u << i)) t.second = -t.second;
    return r;
}

RadicalNumber RadicalNumber::inverse() const {
    if (terms_.empty()) throw std::domain_error("RadicalNumber: division by zero");
    if (terms_.size() == 1) {
        // c g^m with g^m g^m = prod of squares.
        std::uint32_t m = terms_[0].first;
        QuadExt c = terms_[0].second;
        QuadExt sq = 1;
        for (int i = 0; (m >> i) != 0; ++i)
            if (m & (1u << i)) sq *= ctx_->squares.at(i);
        return monomial(ctx_, m, (c * sq).inverse());
    }
    // Multiply by the conjugates in each generator in turn; the product is
    // free of that generator.
    RadicalNumber num = 1;
    RadicalNumber den = *this;
    size_t ngen = ctx_ ? ctx_->squares.size() : 0;
    for (size_t i = 0; i < ngen; ++i) {
        RadicalNumber c = den.flip(static_cast<int>(i));
        if (c == den) continue;
        num *= c;
        den *= c;
    }
    if (!den.is_base() || den.is_zero()) throw std::domain_error("RadicalNumber: not invertible in the formal ring");
    RadicalNumber r = num * RadicalNumber(den.base_value().inverse());
    r.ctx_ = ctx_;
    return r;
}

std::string RadicalNumber::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const auto& [m, c] = terms_[k];
        if (k) s += " + ";
        std::string cs = c.to_string();
        bool compound = !c.is_rational() && c.a() != 0;
        if (m == 0) {
            s += cs;
            continue;
        }
        s += compound ? "(" + cs + ")" : cs;
        for (int i = 0; (m >> i) != 0; ++i)
            if (m & (1u << i)) s += "*" + ctx_->names.at(i);
    }
    return s;
}

std::string to_string(const RadicalNumber& x) { return x.to_string(); }

}  // namespace mirror
