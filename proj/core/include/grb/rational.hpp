#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>

namespace grb {

/// Exact rational number on 64-bit numerator/denominator.
/// Always normalised: den > 0, gcd(num, den) == 1.
/// Intermediate products are computed in 128 bits; results that do not
/// fit in 64 bits throw std::overflow_error.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool isZero() const { return num_ == 0; }
    bool isOne() const { return num_ == 1 && den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational inv() const;

    std::string str() const;
    static Rational parse(const std::string& text);
    static Rational factorial(int n);

  private:
    long long num_;
    long long den_;
};

Rational pow(const Rational& base, int e);
std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace grb
