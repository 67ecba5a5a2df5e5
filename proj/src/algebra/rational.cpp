#include "mirror/algebra/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mirror {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto valid_int = [](const std::string& t) {
        size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        return std::all_of(t.begin() + i, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("malformed rational: " + text);
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational frac(long n, long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational inv_factorial(long n) { return Rational(Integer(1), factorial(n)); }

Rational odd_double_factorial(long n) {
    if (n % 2 == 0) throw std::domain_error("double factorial expects an odd argument");
    Rational r = 1;
    if (n > 0) {
        for (long j = n; j > 1; j -= 2) r *= j;
    } else {
        // (-1)!! = 1, then n!! = (n+2)!!/(n+2) going down.
        for (long j = -1; j > n; j -= 2) r /= (j);
    }
    return r;
}

Rational pow(const Rational& x, long e) {
    if (e < 0) {
        if (x == 0) throw std::domain_error("negative power of zero");
        return pow(Rational(1) / x, -e);
    }
    Rational r = 1, b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

bool rational_sqrt(const Rational& x, Rational& root) {
    if (x < 0) return false;
    if (!mpz_perfect_square_p(x.get_num().get_mpz_t()) || !mpz_perfect_square_p(x.get_den().get_mpz_t()))
        return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long pos_mod(long a, long b) {
    long m = a % b;
    return m < 0 ? m + b : m;
}

long gcd_long(long a, long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace mirror
