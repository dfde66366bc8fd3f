#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qsymb {

class BigInt;
struct BigIntDivMod;

/// Truncated division: quotient rounds toward zero, remainder carries the
/// sign of the dividend, |r| < |b|. Throws Error on division by zero.
BigIntDivMod divmod(const BigInt& a, const BigInt& b);

/// Signed arbitrary-precision integer, little-endian base 2^32 magnitude.
/// Every coefficient in the library is exact; there is no floating point.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    /// Value as long long; throws if out of range (used only in reports).
    long long to_long_long() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    BigInt operator/(const BigInt& b) const;
    BigInt operator%(const BigInt& b) const;

    static BigInt gcd(BigInt a, BigInt b);
    BigInt abs() const;

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    std::strong_ordering operator<=>(const BigInt& o) const;

private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<uint32_t> mag_;      // no leading zero limbs; empty iff sign_ == 0

    friend struct BigIntDivMod;
    friend BigIntDivMod divmod(const BigInt& a, const BigInt& b);

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

struct BigIntDivMod {
    BigInt quot;
    BigInt rem;
};

/// Reduced fraction over BigInt, denominator always positive. Only the exact
/// linear solver uses this; polynomial coefficients stay integral.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    BigRational operator-() const;
    friend BigRational operator+(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a, const BigRational& b);
    friend BigRational operator*(const BigRational& a, const BigRational& b);
    friend BigRational operator/(const BigRational& a, const BigRational& b);
    bool operator==(const BigRational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;
    void reduce();
};

/// Binomial coefficient C(n, k) as an exact integer; 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

} // namespace qsymb
