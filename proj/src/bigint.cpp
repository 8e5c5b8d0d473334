#include "gaiakit/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaiakit::bigint {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    neg_ = v < 0;
    unsigned long long u = neg_ ? -static_cast<unsigned long long>(v) : v;
    while (u) {
        limbs_.push_back(static_cast<std::uint32_t>(u & 0xffffffffull));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
        std::uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        r.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffull);
        carry = s >> 32;
    }
    r.trim();
    return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                         static_cast<std::int64_t>(i < b.limbs_.size() ? b.limbs_[i] : 0);
        if (s < 0) {
            s += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else
            borrow = 0;
        r.limbs_[i] = static_cast<std::uint32_t>(s);
    }
    r.trim();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.neg_ == b.neg_) {
        BigInt r = BigInt::add_mag(a, b);
        r.neg_ = a.neg_ && !r.is_zero();
        return r;
    }
    int c = BigInt::cmp_mag(a, b);
    if (c == 0) return BigInt();
    BigInt r = c > 0 ? BigInt::sub_mag(a, b) : BigInt::sub_mag(b, a);
    r.neg_ = (c > 0 ? a.neg_ : b.neg_) && !r.is_zero();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = static_cast<std::uint64_t>(r.limbs_[k]) + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    r.neg_ = a.neg_ != b.neg_;
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt division by zero");
    q = BigInt();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    BigInt babs = b.abs();
    size_t bits = a.limbs_.size() * 32;
    q.limbs_.assign(a.limbs_.size(), 0);
    BigInt rem;
    for (size_t i = bits; i-- > 0;) {
        // rem = rem * 2 + bit_i(|a|)
        std::uint32_t carry = (a.limbs_[i / 32] >> (i % 32)) & 1u;
        for (size_t j = 0; j < rem.limbs_.size(); ++j) {
            std::uint32_t nc = rem.limbs_[j] >> 31;
            rem.limbs_[j] = (rem.limbs_[j] << 1) | carry;
            carry = nc;
        }
        if (carry) rem.limbs_.push_back(carry);
        rem.trim();
        if (cmp_mag(rem, babs) >= 0) {
            rem = sub_mag(rem, babs);
            q.limbs_[i / 32] |= (1u << (i % 32));
        }
    }
    q.trim();
    rem.trim();
    q.neg_ = (a.neg_ != b.neg_) && !q.is_zero();
    rem.neg_ = a.neg_ && !rem.is_zero();
    r = rem;
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

bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.neg_ != b.neg_) return a.neg_;
    int c = BigInt::cmp_mag(a, b);
    return a.neg_ ? c > 0 : c < 0;
}

std::string BigInt::str() const {
    if (is_zero()) return "0";
    std::string digits;
    BigInt cur = abs();
    BigInt ten(10);
    while (!cur.is_zero()) {
        BigInt q, r;
        divmod(cur, ten, q, r);
        digits += static_cast<char>('0' + (r.is_zero() ? 0 : static_cast<int>(r.limbs_[0])));
        cur = q;
    }
    if (neg_) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& decimal) {
    BigInt r;
    bool neg = false;
    size_t i = 0;
    if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
        neg = decimal[i] == '-';
        ++i;
    }
    if (i == decimal.size()) throw std::invalid_argument("BigInt: empty literal");
    for (; i < decimal.size(); ++i) {
        if (decimal[i] < '0' || decimal[i] > '9')
            throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(decimal[i] - '0');
    }
    if (neg && !r.is_zero()) r.neg_ = true;
    return r;
}

bool BigInt::fits_ll() const {
    if (limbs_.size() > 2) return false;
    unsigned long long mag = 0;
    for (size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    return neg_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

long long BigInt::to_ll() const {
    unsigned long long mag = 0;
    for (size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    return neg_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

} // namespace gaiakit::bigint
