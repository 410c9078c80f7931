#include "spanres/rational.hpp"

#include "spanres/errors.hpp"

#include <ostream>
#include <utility>

namespace spanres {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DomainError("rational with zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_one()) return;
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(text));
    BigInt num = BigInt::from_string(text.substr(0, slash));
    std::string den_text = text.substr(slash + 1);
    BigInt den = BigInt::from_string(den_text);
    if (den.is_zero()) throw ParseError("invalid rational: '" + text + "'");
    return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
    return Rational(-num_, den_, AlreadyCanonical{});
}

Rational Rational::abs() const {
    return Rational(num_.abs(), den_, AlreadyCanonical{});
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    if (num_.is_negative()) return Rational(-den_, -num_, AlreadyCanonical{});
    return Rational(den_, num_, AlreadyCanonical{});
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_.is_one() && b.den_.is_one())
        return Rational(a.num_ + b.num_, BigInt(1), Rational::AlreadyCanonical{});
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_.is_one() && b.den_.is_one())
        return Rational(a.num_ - b.num_, BigInt(1), Rational::AlreadyCanonical{});
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_.is_one() && b.den_.is_one())
        return Rational(a.num_ * b.num_, BigInt(1), Rational::AlreadyCanonical{});
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::pow(long long exponent) const {
    if (exponent == 0) return Rational(1);
    if (exponent < 0) {
        if (is_zero()) throw DomainError("zero raised to a negative power");
        return inverse().pow(-exponent);
    }
    auto e = static_cast<unsigned long long>(exponent);
    // num/den are coprime, so their powers are too.
    return Rational(num_.pow(e), den_.pow(e), AlreadyCanonical{});
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    // Denominators are positive, so cross multiplication preserves order.
    return num_ * rhs.den_ <=> rhs.num_ * den_;
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

}  // namespace spanres
