#include "mirror/algebra/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mirror {

namespace {

constexpr int kMaxVars = 8;
constexpr int kNilpotentLimit = 4096;

LayoutPtr merged_layout(const LayoutPtr& a, const LayoutPtr& b) {
    if (a == b || *a == *b) return a;
    if (a->vars.size() != b->vars.size() || !(a->phase == b->phase) || a->capped != b->capped)
        throw std::invalid_argument("PhasedSeries: incompatible variables");
    SeriesLayout m = *a;
    for (size_t i = 0; i < m.vars.size(); ++i) {
        if (m.vars[i].name != b->vars[i].name) throw std::invalid_argument("PhasedSeries: incompatible variables");
        m.vars[i].min_exp = std::max(m.vars[i].min_exp, b->vars[i].min_exp);
        m.vars[i].max_exp = std::min(m.vars[i].max_exp, b->vars[i].max_exp);
    }
    if (a->cap < 0)
        m.cap = b->cap;
    else if (b->cap >= 0)
        m.cap = std::min(a->cap, b->cap);
    return make_layout(std::move(m));
}

}  // namespace

int SeriesLayout::index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown series variable: " + name);
}

LayoutPtr make_layout(SeriesLayout layout) {
    if (layout.vars.size() > static_cast<size_t>(kMaxVars)) throw std::invalid_argument("PhasedSeries: at most 8 variables");
    for (const auto& v : layout.vars)
        if (v.min_exp < -64 || v.max_exp > 191 || v.min_exp > v.max_exp)
            throw std::invalid_argument("PhasedSeries: truncation bounds out of range for " + v.name);
    if (layout.phase.r <= 0) throw std::invalid_argument("PhasedSeries: phase modulus must be positive");
    return std::make_shared<const SeriesLayout>(std::move(layout));
}

PhasedSeries::Key PhasedSeries::pack(const Exponents& e) const {
    Key k = 0;
    size_t n = nvars();
    for (size_t i = 0; i < n; ++i) k = (k << 8) | static_cast<Key>(e[i] + kOffset);
    return k;
}

PhasedSeries::Exponents PhasedSeries::unpack(Key k) const {
    size_t n = nvars();
    Exponents e(n);
    for (size_t i = n; i-- > 0;) {
        e[i] = static_cast<int>(k & 0xffu) - kOffset;
        k >>= 8;
    }
    return e;
}

bool PhasedSeries::in_bounds(const Exponents& e) const {
    const auto& L = *layout_;
    if (e.size() != L.vars.size()) throw std::invalid_argument("PhasedSeries: exponent arity mismatch");
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < L.vars[i].min_exp || e[i] > L.vars[i].max_exp) return false;
    if (L.cap >= 0) {
        int d = 0;
        for (int i : L.capped) d += e[static_cast<size_t>(i)];
        if (d > L.cap) return false;
    }
    return true;
}

PhasedSeries PhasedSeries::constant(LayoutPtr layout, const Rational& c) {
    PhasedSeries s(std::move(layout));
    s.add_term(Exponents(s.nvars(), 0), c);
    return s;
}

PhasedSeries PhasedSeries::variable(LayoutPtr layout, int index) {
    PhasedSeries s(std::move(layout));
    Exponents e(s.nvars(), 0);
    e.at(static_cast<size_t>(index)) = 1;
    s.add_term(e, 1);
    return s;
}

PhasedSeries PhasedSeries::monomial(LayoutPtr layout, const Exponents& e, const Rational& c) {
    PhasedSeries s(std::move(layout));
    s.add_term(e, c);
    return s;
}

Rational PhasedSeries::coeff(const Exponents& e) const {
    if (!in_bounds(e)) throw std::out_of_range("PhasedSeries: coefficient outside truncation: " + monomial_string(e));
    auto it = terms_.find(pack(e));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational PhasedSeries::constant_term() const {
    Exponents z(nvars(), 0);
    if (!in_bounds(z)) return 0;
    auto it = terms_.find(pack(z));
    return it == terms_.end() ? Rational(0) : it->second;
}

void PhasedSeries::add_term(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0 || !in_bounds(e)) return;
    Key k = pack(e);
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

std::vector<std::pair<PhasedSeries::Exponents, Rational>> PhasedSeries::terms() const {
    std::vector<std::pair<Exponents, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(unpack(k), c);
    return out;
}

void PhasedSeries::for_each(const std::function<void(const Exponents&, const Rational&)>& fn) const {
    for (const auto& [k, c] : terms_) fn(unpack(k), c);
}

void PhasedSeries::require_compatible(const PhasedSeries& o) const {
    if (!layout_ || !o.layout_) throw std::invalid_argument("PhasedSeries: uninitialized series");
}

PhasedSeries& PhasedSeries::operator+=(const PhasedSeries& o) {
    require_compatible(o);
    LayoutPtr m = merged_layout(layout_, o.layout_);
    if (m != layout_) *this = restrict_to(m);
    if (m == o.layout_ || *m == *o.layout_) {
        for (const auto& [k, c] : o.terms_) {
            auto it = terms_.find(k);
            if (it == terms_.end()) {
                terms_.emplace(k, c);
            } else {
                it->second += c;
                if (sgn(it->second) == 0) terms_.erase(it);
            }
        }
    } else {
        o.restrict_to(m).for_each([&](const Exponents& e, const Rational& c) { add_term(e, c); });
    }
    return *this;
}

PhasedSeries& PhasedSeries::operator-=(const PhasedSeries& o) { return *this += -o; }

PhasedSeries PhasedSeries::operator-() const {
    PhasedSeries r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

PhasedSeries operator*(const PhasedSeries& a0, const PhasedSeries& b0) {
    a0.require_compatible(b0);
    LayoutPtr m = merged_layout(a0.layout_, b0.layout_);
    PhasedSeries a = m == a0.layout_ ? a0 : a0.restrict_to(m);
    PhasedSeries b = m == b0.layout_ ? b0 : b0.restrict_to(m);
    PhasedSeries r(m);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const auto& L = *m;
    size_t n = L.vars.size();
    // Decode once; per-variable bounds and capped degree are checked on sums.
    auto decode = [&](const PhasedSeries& s) {
        std::vector<std::pair<PhasedSeries::Exponents, const Rational*>> d;
        d.reserve(s.terms_.size());
        for (const auto& [k, c] : s.terms_) d.emplace_back(s.unpack(k), &c);
        return d;
    };
    auto da = decode(a);
    auto db = decode(b);
    std::vector<int> capflag(n, 0);
    for (int i : L.capped) capflag[static_cast<size_t>(i)] = 1;
    auto capdeg = [&](const PhasedSeries::Exponents& e) {
        int d = 0;
        for (size_t i = 0; i < n; ++i)
            if (capflag[i]) d += e[i];
        return d;
    };
    std::vector<int> cda(da.size()), cdb(db.size());
    for (size_t i = 0; i < da.size(); ++i) cda[i] = capdeg(da[i].first);
    for (size_t j = 0; j < db.size(); ++j) cdb[j] = capdeg(db[j].first);
    PhasedSeries::Exponents e(n);
    Rational prod;
    for (size_t i = 0; i < da.size(); ++i) {
        for (size_t j = 0; j < db.size(); ++j) {
            if (L.cap >= 0 && cda[i] + cdb[j] > L.cap) continue;
            bool ok = true;
            for (size_t v = 0; v < n; ++v) {
                e[v] = da[i].first[v] + db[j].first[v];
                if (e[v] < L.vars[v].min_exp || e[v] > L.vars[v].max_exp) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            prod = *da[i].second * *db[j].second;
            PhasedSeries::Key k = r.pack(e);
            auto it = r.terms_.find(k);
            if (it == r.terms_.end())
                r.terms_.emplace(k, prod);
            else
                it->second += prod;
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (sgn(it->second) == 0)
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

bool operator==(const PhasedSeries& a, const PhasedSeries& b) {
    if (!(a.layout_ == b.layout_ || *a.layout_ == *b.layout_)) return false;
    return a.terms_ == b.terms_;
}

PhasedSeries PhasedSeries::scaled(const Rational& s) const {
    PhasedSeries r(layout_);
    if (sgn(s) == 0) return r;
    r.terms_ = terms_;
    for (auto& [k, c] : r.terms_) c *= s;
    return r;
}

PhasedSeries PhasedSeries::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    PhasedSeries r = constant(layout_, 1);
    PhasedSeries base = *this;
    while (n) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

PhasedSeries PhasedSeries::inverse() const {
    Rational c0 = constant_term();
    if (sgn(c0) == 0) throw std::domain_error("PhasedSeries: division by a non-unit");
    Rational inv0 = 1 / c0;
    // f = c0 (1 + g); 1/f = inv0 * sum (-g)^n.
    PhasedSeries g = scaled(inv0) - constant(layout_, 1);
    PhasedSeries minus_g = -g;
    PhasedSeries acc = constant(layout_, 1);
    PhasedSeries pw = constant(layout_, 1);
    for (int n = 1; n <= kNilpotentLimit; ++n) {
        pw = pw * minus_g;
        if (pw.is_zero()) return acc.scaled(inv0);
        acc += pw;
    }
    throw std::domain_error("PhasedSeries: inverse did not terminate (non-nilpotent remainder)");
}

PhasedSeries PhasedSeries::exp() const {
    if (sgn(constant_term()) != 0) throw std::domain_error("PhasedSeries: exp needs zero constant term");
    PhasedSeries acc = constant(layout_, 1);
    PhasedSeries pw = constant(layout_, 1);
    for (int n = 1; n <= kNilpotentLimit; ++n) {
        pw = (pw * *this).scaled(Rational(1, n));
        if (pw.is_zero()) return acc;
        acc += pw;
    }
    throw std::domain_error("PhasedSeries: exp did not terminate (non-nilpotent argument)");
}

PhasedSeries PhasedSeries::log() const {
    if (constant_term() != 1) throw std::domain_error("PhasedSeries: log of a non-unit (constant term must be 1)");
    PhasedSeries g = *this - constant(layout_, 1);
    PhasedSeries acc(layout_);
    PhasedSeries pw = constant(layout_, 1);
    for (int n = 1; n <= kNilpotentLimit; ++n) {
        pw = pw * g;
        if (pw.is_zero()) return acc;
        acc += pw.scaled(Rational(n % 2 ? 1 : -1, n));
    }
    throw std::domain_error("PhasedSeries: log did not terminate (non-nilpotent argument)");
}

PhasedSeries PhasedSeries::compose(int i, const PhasedSeries& g) const {
    if (sgn(g.constant_term()) != 0) throw std::domain_error("PhasedSeries: substituted series needs zero constant term");
    size_t vi = static_cast<size_t>(i);
    int lo = layout_->vars.at(vi).min_exp;
    int hi = layout_->vars.at(vi).max_exp;
    if (lo < 0) throw std::domain_error("PhasedSeries: cannot substitute into a Laurent variable");
    // Group by exponent of x_i, then Horner in g.
    std::vector<PhasedSeries> slices(static_cast<size_t>(hi + 1), PhasedSeries(layout_));
    for (const auto& [k, c] : terms_) {
        Exponents e = unpack(k);
        int d = e[vi];
        e[vi] = 0;
        slices[static_cast<size_t>(d)].add_term(e, c);
    }
    PhasedSeries acc(layout_);
    for (int d = hi; d >= 0; --d) {
        acc = acc * g;
        acc += slices[static_cast<size_t>(d)];
    }
    return acc;
}

PhasedSeries PhasedSeries::derive(int i) const {
    PhasedSeries r(layout_);
    size_t vi = static_cast<size_t>(i);
    for (const auto& [k, c] : terms_) {
        Exponents e = unpack(k);
        int d = e[vi];
        if (d == 0) continue;
        e[vi] = d - 1;
        r.add_term(e, c * d);
    }
    return r;
}

PhasedSeries PhasedSeries::integrate(int i) const {
    PhasedSeries r(layout_);
    size_t vi = static_cast<size_t>(i);
    for (const auto& [k, c] : terms_) {
        Exponents e = unpack(k);
        int d = e[vi];
        if (d == -1) throw std::domain_error("PhasedSeries: cannot integrate x^-1");
        e[vi] = d + 1;
        r.add_term(e, c / (d + 1));
    }
    return r;
}

PhasedSeries PhasedSeries::euler(int i) const {
    PhasedSeries r(layout_);
    size_t vi = static_cast<size_t>(i);
    for (const auto& [k, c] : terms_) {
        Exponents e = unpack(k);
        if (e[vi] != 0) r.terms_.emplace(k, c * e[vi]);
    }
    return r;
}

PhasedSeries PhasedSeries::shift(int i, int s) const {
    PhasedSeries r(layout_);
    size_t vi = static_cast<size_t>(i);
    for (const auto& [k, c] : terms_) {
        Exponents e = unpack(k);
        e[vi] += s;
        r.add_term(e, c);
    }
    return r;
}

PhasedSeries PhasedSeries::specialize(int i, const Rational& value) const {
    PhasedSeries r(layout_);
    size_t vi = static_cast<size_t>(i);
    for (const auto& [k, c] : terms_) {
        Exponents e = unpack(k);
        Rational f = mirror::pow(value, e[vi]);
        e[vi] = 0;
        r.add_term(e, c * f);
    }
    return r;
}

PhasedSeries PhasedSeries::h_project(long r, const std::vector<int>& vars) const {
    if (r <= 0) throw std::invalid_argument("h_project: r must be positive");
    PhasedSeries out(layout_);
    for (const auto& [k, c] : terms_) {
        Exponents e = unpack(k);
        bool keep = std::all_of(vars.begin(), vars.end(), [&](int v) { return e[static_cast<size_t>(v)] % r == 0; });
        if (keep) out.terms_.emplace(k, c);
    }
    return out;
}

PhasedSeries PhasedSeries::dephase(const std::vector<std::string>& x_names) const {
    const auto& L = *layout_;
    const auto& ph = L.phase;
    if (!x_names.empty() && x_names.size() != ph.eta.size())
        throw std::invalid_argument("dephase: one name per eta variable required");
    SeriesLayout nl = L;
    nl.phase = PhaseRule{};
    for (size_t j = 0; j < ph.eta.size(); ++j) {
        auto& v = nl.vars[static_cast<size_t>(ph.eta[j])];
        v.max_exp = static_cast<int>(floor_div(v.max_exp, ph.r));
        v.min_exp = static_cast<int>(-floor_div(-v.min_exp, ph.r));
        if (!x_names.empty()) v.name = x_names[j];
    }
    PhasedSeries out(make_layout(std::move(nl)));
    for (const auto& [k, c] : terms_) {
        Exponents e = unpack(k);
        long sign_exp = 0;
        for (int v : ph.eta) {
            int& x = e[static_cast<size_t>(v)];
            if (x % ph.r != 0)
                throw std::domain_error("dephase: eta exponent not divisible by r in " + monomial_string(unpack(k)));
            x /= static_cast<int>(ph.r);
            // zeta^(k r m) = (-1)^(k m).
            sign_exp += ph.k * x;
        }
        if (ph.q1 >= 0) sign_exp += e[static_cast<size_t>(ph.q1)];
        out.add_term(e, pos_mod(sign_exp, 2) ? Rational(-c) : c);
    }
    return out;
}

PhasedSeries PhasedSeries::restrict_to(LayoutPtr layout) const {
    if (layout->vars.size() != nvars()) throw std::invalid_argument("PhasedSeries: incompatible variables");
    for (size_t i = 0; i < nvars(); ++i)
        if (layout->vars[i].name != layout_->vars[i].name) throw std::invalid_argument("PhasedSeries: incompatible variables");
    PhasedSeries r(std::move(layout));
    for (const auto& [k, c] : terms_) r.add_term(unpack(k), c);
    return r;
}

std::string PhasedSeries::monomial_string(const Exponents& e) const {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += layout_->vars[i].name;
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

std::string PhasedSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + mirror::to_string(c) + ")*" + monomial_string(unpack(k));
    }
    return s;
}

std::string PhasedSeries::to_tsv() const {
    std::ostringstream os;
    for (const auto& v : layout_->vars) os << "exp_" << v.name << '\t';
    os << "num\tden\n";
    for (const auto& [k, c] : terms_) {
        for (int x : unpack(k)) os << x << '\t';
        os << c.get_num().get_str() << '\t' << c.get_den().get_str() << '\n';
    }
    return os.str();
}

std::string PhasedSeries::to_json() const {
    nlohmann::ordered_json j;
    const auto& L = *layout_;
    j["vars"] = nlohmann::json::array();
    j["orders"] = nlohmann::json::array();
    bool laurent = false;
    for (const auto& v : L.vars) {
        j["vars"].push_back(v.name);
        j["orders"].push_back(v.max_exp);
        laurent = laurent || v.min_exp != 0;
    }
    if (laurent) {
        j["min_orders"] = nlohmann::json::array();
        for (const auto& v : L.vars) j["min_orders"].push_back(v.min_exp);
    }
    if (L.cap >= 0) {
        j["total_degree_cap"] = L.cap;
        j["capped"] = nlohmann::json::array();
        for (int i : L.capped) j["capped"].push_back(L.vars[static_cast<size_t>(i)].name);
    }
    if (L.phase.active()) {
        nlohmann::ordered_json ph;
        ph["k"] = L.phase.k;
        ph["r"] = L.phase.r;
        ph["eta"] = nlohmann::json::array();
        for (int i : L.phase.eta) ph["eta"].push_back(L.vars[static_cast<size_t>(i)].name);
        if (L.phase.q1 >= 0) ph["q1"] = L.vars[static_cast<size_t>(L.phase.q1)].name;
        j["phase"] = ph;
    }
    j["terms"] = nlohmann::json::array();
    for (const auto& [k, c] : terms_) {
        nlohmann::ordered_json t;
        t["exp"] = unpack(k);
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        j["terms"].push_back(t);
    }
    return j.dump();
}

PhasedSeries PhasedSeries::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    SeriesLayout L;
    const auto& vars = j.at("vars");
    const auto& orders = j.at("orders");
    for (size_t i = 0; i < vars.size(); ++i) {
        SeriesVar v;
        v.name = vars[i].get<std::string>();
        v.max_exp = orders.at(i).get<int>();
        if (j.contains("min_orders")) v.min_exp = j["min_orders"].at(i).get<int>();
        L.vars.push_back(v);
    }
    if (j.contains("total_degree_cap")) {
        L.cap = j["total_degree_cap"].get<int>();
        for (const auto& n : j.at("capped")) L.capped.push_back(L.index(n.get<std::string>()));
    }
    if (j.contains("phase")) {
        const auto& ph = j["phase"];
        L.phase.k = ph.at("k").get<long>();
        L.phase.r = ph.at("r").get<long>();
        for (const auto& n : ph.at("eta")) L.phase.eta.push_back(L.index(n.get<std::string>()));
        if (ph.contains("q1")) L.phase.q1 = L.index(ph["q1"].get<std::string>());
    }
    PhasedSeries s(make_layout(std::move(L)));
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exp").get<Exponents>();
        Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
        c.canonicalize();
        if (!s.in_bounds(e)) throw std::invalid_argument("PhasedSeries JSON: term outside truncation");
        s.add_term(e, c);
    }
    return s;
}

std::optional<PhasedSeries::Exponents> PhasedSeries::first_difference(const PhasedSeries& a, const PhasedSeries& b) {
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) return a.unpack(ia->first);
        if (ia == a.terms_.end() || ib->first < ia->first) return b.unpack(ib->first);
        if (ia->second != ib->second) return a.unpack(ia->first);
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

}  // namespace mirror
