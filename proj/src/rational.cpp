#include "ricci/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace ricci {

void Rational::normalize() {
    if (den_ == 0)
        throw Error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

Rational Rational::parse(const std::string& text) {
    auto valid = [](const std::string& part) {
        std::size_t i = !part.empty() && (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den_part = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
    if (!valid(num_part) || !valid(den_part))
        throw ParseError("not a rational: '" + text + "'");
    return Rational(BigInt(num_part), BigInt(den_part));
}

double Rational::to_double() const {
    return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_));
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

std::string Rational::decimal(int digits) const {
    BigInt n = num_ < 0 ? BigInt(-num_) : num_;
    std::string out = num_ < 0 ? "-" : "";
    out += BigInt(n / den_).str();
    BigInt rem = n % den_;
    if (rem == 0 || digits <= 0)
        return out;
    std::string frac;
    for (int i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        frac += BigInt(rem / den_).str();
        rem %= den_;
    }
    while (!frac.empty() && frac.back() == '0')
        frac.pop_back();
    if (!frac.empty())
        out += "." + frac;
    return out;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0)
        throw Error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational abs(const Rational& r) {
    return r.is_negative() ? -r : r;
}

Rational min(const Rational& a, const Rational& b) {
    return b < a ? b : a;
}

Rational max(const Rational& a, const Rational& b) {
    return a < b ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace ricci
