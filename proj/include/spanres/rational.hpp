#pragma once

#include "spanres/bigint.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace spanres {

// Exact rational scalar.
//
// Always kept canonical: denominator > 0 and gcd(|num|, den) == 1, with zero
// stored as 0/1. Equality is therefore structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(int value) : Rational(static_cast<long long>(value)) {}
    explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);
    Rational(long long numerator, long long denominator)
        : Rational(BigInt(numerator), BigInt(denominator)) {}

    // "p" or "p/q" with q > 0 after canonicalization. Throws ParseError.
    static Rational from_string(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational abs() const;
    Rational inverse() const;  // DomainError on zero

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // DomainError on zero divisor

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    // Integer power with 0^0 == 1. Raising zero to a negative power throws
    // DomainError.
    Rational pow(long long exponent) const;

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& rhs) const;

    // "p/q" in lowest terms, or plain "p" when the value is integral.
    std::string to_string() const;

private:
    struct AlreadyCanonical {};
    Rational(BigInt numerator, BigInt denominator, AlreadyCanonical)
        : num_(std::move(numerator)), den_(std::move(denominator)) {}

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace spanres
