#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spanres {

// Signed arbitrary-precision integer.
//
// Representation: sign + magnitude in base 2^32, least significant limb
// first. Canonical form has no high zero limbs and zero is never negative,
// so value equality is structural equality.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);
    BigInt(int value) : BigInt(static_cast<long long>(value)) {}

    // Decimal string with optional leading '-'. Throws ParseError.
    static BigInt from_string(const std::string& text);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }
    int sign() const { return is_zero() ? 0 : negative_ ? -1 : 1; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    BigInt abs() const;
    BigInt operator-() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // Truncating division (C semantics): quotient rounds toward zero and the
    // remainder carries the dividend's sign. Division by zero throws
    // DomainError.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);

    // Quotient and remainder in one pass; a == q*b + r with |r| < |b|.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& quotient, BigInt& remainder);

    // Greatest common divisor, always nonnegative; gcd(0, 0) == 0.
    static BigInt gcd(const BigInt& a, const BigInt& b);

    // Least common multiple, always nonnegative.
    static BigInt lcm(const BigInt& a, const BigInt& b);

    BigInt pow(unsigned long long exponent) const;

    bool operator==(const BigInt&) const = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    // Throws DomainError when the value does not fit.
    long long to_long_long() const;

    std::string to_string() const;

private:
    using Mag = std::vector<std::uint32_t>;

    static void trim(Mag& m);
    static int compare_mag(const Mag& a, const Mag& b);
    static Mag add_mag(const Mag& a, const Mag& b);
    static Mag sub_mag(const Mag& a, const Mag& b);  // requires a >= b
    static Mag mul_mag(const Mag& a, const Mag& b);
    static void divmod_mag(const Mag& u, const Mag& v, Mag& q, Mag& r);
    static void divmod_small(const Mag& u, std::uint32_t v, Mag& q, std::uint32_t& r);
    static Mag mul_small_add(const Mag& a, std::uint32_t factor, std::uint32_t addend);

    BigInt(bool negative, Mag limbs);

    bool negative_ = false;
    Mag limbs_;  // empty means zero
};

std::ostream& operator<<(std::ostream& os, const BigInt& value);

}  // namespace spanres
