#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gaiakit::bigint {

// Arbitrary-precision signed integer, sign + base-2^32 magnitude. Only the
// operations the integer linear algebra needs; division truncates toward
// zero like built-in integers.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v); // NOLINT: implicit by design

    static BigInt from_string(const std::string& decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b); // trunc toward 0
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    std::string str() const;

    // Fits in long long? (used only for reporting small torsion numbers)
    bool fits_ll() const;
    long long to_ll() const;

private:
    bool neg_ = false;
    std::vector<std::uint32_t> limbs_; // little-endian, no trailing zeros

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b); // |a| >= |b|
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
};

BigInt gcd(BigInt a, BigInt b);

} // namespace gaiakit::bigint
