#include "grb/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace grb {

namespace {

long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<long long>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    __int128 nn = n, dd = d;
    if (dd < 0) { nn = -nn; dd = -dd; }
    __int128 g = gcd128(nn, dd);
    if (g > 1) { nn /= g; dd /= g; }
    num_ = narrow(nn);
    den_ = narrow(dd);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-static_cast<__int128>(num_));
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    __int128 g = gcd128(n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    __int128 g = gcd128(n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this *= o.inv();
}

Rational Rational::inv() const {
    if (num_ == 0) throw std::domain_error("inverse of zero");
    Rational r;
    if (num_ < 0) {
        r.num_ = narrow(-static_cast<__int128>(den_));
        r.den_ = narrow(-static_cast<__int128>(num_));
    } else {
        r.num_ = den_;
        r.den_ = num_;
    }
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

Rational Rational::factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative");
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

Rational pow(const Rational& base, int e) {
    if (e < 0) return pow(base.inv(), -e);
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace grb
