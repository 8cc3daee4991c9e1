#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ricci/errors.hpp"

namespace ricci {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Invariant: den > 0 and gcd(|num|, den) == 1, so every
// value has exactly one representation and == is plain member comparison.
class Rational {
  public:
    Rational() = default;
    Rational(long long value) : num_(value) {} // NOLINT: implicit, lets `1 - w` read naturally
    Rational(BigInt numerator, BigInt denominator);

    // Accepts "p", "p/q", and an optional leading sign on either part.
    static Rational parse(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const;
    // Always "p/q", including "3/1": keeps parse(str()) a round trip trivially.
    std::string str() const;
    // Decimal expansion truncated toward zero, trailing zeros stripped.
    std::string decimal(int digits = 12) const;

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
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  private:
    void normalize();

    BigInt num_ = 0;
    BigInt den_ = 1;
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace ricci
