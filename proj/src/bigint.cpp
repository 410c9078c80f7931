#include "spanres/bigint.hpp"

#include "spanres/errors.hpp"

#include <bit>
#include <cstdio>
#include <limits>
#include <ostream>
#include <utility>

namespace spanres {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
constexpr std::uint32_t kDecChunkDigits = 9;
constexpr std::uint32_t kDecChunk = 1000000000u;  // 10^9 < 2^32
}  // namespace

BigInt::BigInt(bool negative, Mag limbs) : negative_(negative), limbs_(std::move(limbs)) {
    trim(limbs_);
    if (limbs_.empty()) negative_ = false;
}

BigInt::BigInt(long long value) {
    if (value == 0) return;
    negative_ = value < 0;
    // Careful with LLONG_MIN: negate in unsigned space.
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
    limbs_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

void BigInt::trim(Mag& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

int BigInt::compare_mag(const Mag& a, const Mag& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

BigInt::Mag BigInt::add_mag(const Mag& a, const Mag& b) {
    const Mag& lo = a.size() < b.size() ? a : b;
    const Mag& hi = a.size() < b.size() ? b : a;
    Mag out(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    out[hi.size()] = static_cast<std::uint32_t>(carry);
    trim(out);
    return out;
}

BigInt::Mag BigInt::sub_mag(const Mag& a, const Mag& b) {
    Mag out(a.size(), 0);
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(cur);
    }
    trim(out);
    return out;
}

BigInt::Mag BigInt::mul_mag(const Mag& a, const Mag& b) {
    if (a.empty() || b.empty()) return {};
    Mag out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        const std::uint64_t ai = a[i];
        if (ai == 0) continue;
        std::uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry != 0) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    trim(out);
    return out;
}

void BigInt::divmod_small(const Mag& u, std::uint32_t v, Mag& q, std::uint32_t& r) {
    q.assign(u.size(), 0);
    std::uint64_t rem = 0;
    for (size_t i = u.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | u[i];
        q[i] = static_cast<std::uint32_t>(cur / v);
        rem = cur % v;
    }
    trim(q);
    r = static_cast<std::uint32_t>(rem);
}

// Knuth algorithm D on base-2^32 digits; requires v.size() >= 2 and |u| >= |v|.
void BigInt::divmod_mag(const Mag& u, const Mag& v, Mag& q, Mag& r) {
    const size_t m = u.size();
    const size_t n = v.size();
    const int s = std::countl_zero(v[n - 1]);

    Mag vn(n), un(m + 1);
    if (s == 0) {
        vn = v;
        for (size_t i = 0; i < m; ++i) un[i] = u[i];
        un[m] = 0;
    } else {
        for (size_t i = n - 1; i > 0; --i)
            vn[i] = (v[i] << s) | static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i - 1]) >> (32 - s));
        vn[0] = v[0] << s;
        un[m] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[m - 1]) >> (32 - s));
        for (size_t i = m - 1; i > 0; --i)
            un[i] = (u[i] << s) | static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[i - 1]) >> (32 - s));
        un[0] = u[0] << s;
    }

    q.assign(m - n + 1, 0);
    for (size_t jj = m - n + 1; jj-- > 0;) {
        const size_t j = jj;
        std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vn[n - 1];
        std::uint64_t rhat = num % vn[n - 1];
        while (qhat >= kBase ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }

        // Multiply and subtract; k is a signed borrow.
        std::int64_t k = 0;
        std::int64_t t = 0;
        for (size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i];
            t = static_cast<std::int64_t>(static_cast<std::uint64_t>(un[i + j]) - k - (p & 0xFFFFFFFFull));
            un[i + j] = static_cast<std::uint32_t>(t);
            k = static_cast<std::int64_t>(p >> 32) - (t >> 32);
        }
        t = static_cast<std::int64_t>(static_cast<std::uint64_t>(un[j + n]) - k);
        un[j + n] = static_cast<std::uint32_t>(t);

        q[j] = static_cast<std::uint32_t>(qhat);
        if (t < 0) {
            // qhat was one too large; add the divisor back.
            --q[j];
            std::uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                std::uint64_t cur = static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry;
                un[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            un[j + n] += static_cast<std::uint32_t>(carry);
        }
    }
    trim(q);

    r.assign(n, 0);
    if (s == 0) {
        for (size_t i = 0; i < n; ++i) r[i] = un[i];
    } else {
        for (size_t i = 0; i < n - 1; ++i)
            r[i] = (un[i] >> s) | static_cast<std::uint32_t>(static_cast<std::uint64_t>(un[i + 1]) << (32 - s));
        r[n - 1] = un[n - 1] >> s;
    }
    trim(r);
}

BigInt::Mag BigInt::mul_small_add(const Mag& a, std::uint32_t factor, std::uint32_t addend) {
    Mag out(a.size() + 1, 0);
    std::uint64_t carry = addend;
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * factor + carry;
        out[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    out[a.size()] = static_cast<std::uint32_t>(carry);
    trim(out);
    return out;
}

BigInt BigInt::from_string(const std::string& text) {
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw ParseError("invalid integer: '" + text + "'");
    for (size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw ParseError("invalid integer: '" + text + "'");
    }

    Mag limbs;
    size_t i = pos;
    size_t first = (text.size() - pos) % kDecChunkDigits;
    if (first == 0) first = kDecChunkDigits;
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    for (size_t d = 0; d < first; ++d) {
        chunk = chunk * 10 + static_cast<std::uint32_t>(text[i++] - '0');
        scale *= 10;
    }
    limbs = mul_small_add(limbs, scale, chunk);
    while (i < text.size()) {
        chunk = 0;
        for (size_t d = 0; d < kDecChunkDigits; ++d)
            chunk = chunk * 10 + static_cast<std::uint32_t>(text[i++] - '0');
        limbs = mul_small_add(limbs, kDecChunk, chunk);
    }
    return BigInt(negative, std::move(limbs));
}

BigInt BigInt::abs() const {
    return BigInt(false, limbs_);
}

BigInt BigInt::operator-() const {
    return BigInt(!negative_, limbs_);
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.negative_ == b.negative_)
        return BigInt(a.negative_, BigInt::add_mag(a.limbs_, b.limbs_));
    int cmp = BigInt::compare_mag(a.limbs_, b.limbs_);
    if (cmp == 0) return BigInt();
    if (cmp > 0) return BigInt(a.negative_, BigInt::sub_mag(a.limbs_, b.limbs_));
    return BigInt(b.negative_, BigInt::sub_mag(b.limbs_, a.limbs_));
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    return a + (-b);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    return BigInt(a.negative_ != b.negative_, BigInt::mul_mag(a.limbs_, b.limbs_));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quotient, BigInt& remainder) {
    if (b.is_zero()) throw DomainError("division by zero");
    int cmp = compare_mag(a.limbs_, b.limbs_);
    if (cmp < 0) {
        quotient = BigInt();
        remainder = a;
        return;
    }
    Mag q, r;
    if (b.limbs_.size() == 1) {
        std::uint32_t rs = 0;
        divmod_small(a.limbs_, b.limbs_[0], q, rs);
        r.clear();
        if (rs != 0) r.push_back(rs);
    } else {
        divmod_mag(a.limbs_, b.limbs_, q, r);
    }
    bool qneg = a.negative_ != b.negative_;
    bool rneg = a.negative_;
    quotient = BigInt(qneg, std::move(q));
    remainder = BigInt(rneg, std::move(r));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) { return *this = *this + rhs; }
BigInt& BigInt::operator-=(const BigInt& rhs) { return *this = *this - rhs; }
BigInt& BigInt::operator*=(const BigInt& rhs) { return *this = *this * rhs; }
BigInt& BigInt::operator/=(const BigInt& rhs) { return *this = *this / rhs; }

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    Mag x = a.limbs_;
    Mag y = b.limbs_;
    while (!y.empty()) {
        if (compare_mag(x, y) < 0) {
            std::swap(x, y);
            continue;
        }
        Mag q, r;
        if (y.size() == 1) {
            std::uint32_t rs = 0;
            divmod_small(x, y[0], q, rs);
            r.clear();
            if (rs != 0) r.push_back(rs);
        } else {
            divmod_mag(x, y, q, r);
        }
        x = std::move(y);
        y = std::move(r);
    }
    return BigInt(false, std::move(x));
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt g = gcd(a, b);
    return (a / g * b).abs();
}

BigInt BigInt::pow(unsigned long long exponent) const {
    BigInt base = *this;
    BigInt result(1);
    while (exponent > 0) {
        if (exponent & 1ull) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (negative_ != rhs.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int cmp = compare_mag(limbs_, rhs.limbs_);
    if (negative_) cmp = -cmp;
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

long long BigInt::to_long_long() const {
    if (limbs_.size() > 2) throw DomainError("BigInt does not fit in long long");
    std::uint64_t mag = 0;
    if (!limbs_.empty()) mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (negative_) {
        if (mag > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()) + 1)
            throw DomainError("BigInt does not fit in long long");
        return static_cast<long long>(~mag + 1);
    }
    if (mag > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
        throw DomainError("BigInt does not fit in long long");
    return static_cast<long long>(mag);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    Mag mag = limbs_;
    std::vector<std::uint32_t> chunks;
    while (!mag.empty()) {
        Mag q;
        std::uint32_t r = 0;
        divmod_small(mag, kDecChunk, q, r);
        chunks.push_back(r);
        mag = std::move(q);
    }
    std::string out = negative_ ? "-" : "";
    out += std::to_string(chunks.back());
    char buf[16];
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", chunks[i]);
        out += buf;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
    return os << value.to_string();
}

}  // namespace spanres
