#include "qsymb/bigint.hpp"

#include "qsymb/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace qsymb {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> out;
    out.reserve(hi.size() + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        out.push_back(static_cast<uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Schoolbook long division, Knuth-style quotient estimation on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    // normalize so the divisor's top limb has its high bit set
    int shift = 0;
    for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    auto shl = [shift](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] |= static_cast<uint32_t>((static_cast<uint64_t>(v[i]) << shift) & 0xffffffffu);
            if (shift) out[i + 1] = static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >> (32 - shift));
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<uint32_t> u = shl(a);
    std::vector<uint32_t> v = shl(b);
    const size_t n = v.size();
    const size_t m = u.size() - n;
    u.push_back(0);
    q.assign(m + 1, 0);

    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qh = num / v[n - 1];
        uint64_t rh = num % v[n - 1];
        if (qh >= kBase) {
            qh = kBase - 1;
            rh = num - qh * v[n - 1];
        }
        while (rh < kBase && qh * v[n - 2] > ((rh << 32) | u[j + n - 2])) {
            --qh;
            rh += v[n - 1];
        }
        // multiply-subtract qh*v from u[j..j+n]
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qh * v[i] + carry;
            carry = p >> 32;
            int64_t d = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
            if (d < 0) {
                d += static_cast<int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(d);
        }
        int64_t d = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (d < 0) {
            // estimate was one too large: add v back
            d += static_cast<int64_t>(kBase);
            --qh;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            d += static_cast<int64_t>(c2);
            d &= 0xffffffff;
        }
        u[j + n] = static_cast<uint32_t>(d);
        q[j] = static_cast<uint32_t>(qh);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // denormalize the remainder
    u.resize(n);
    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift && i + 1 < n) r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(u[i + 1]) << (32 - shift));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        mag_ = sub_mag(mag_, o.mag_);
    } else {
        mag_ = sub_mag(o.mag_, mag_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    sign_ *= o.sign_;
    mag_ = mul_mag(mag_, o.mag_);
    if (mag_.empty()) sign_ = 0;
    return *this;
}

BigIntDivMod divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw Error("BigInt: division by zero");
    BigIntDivMod out;
    if (a.sign_ == 0) return out;
    BigInt::divmod_mag(a.mag_, b.mag_, out.quot.mag_, out.rem.mag_);
    out.quot.sign_ = out.quot.mag_.empty() ? 0 : a.sign_ * b.sign_;
    out.rem.sign_ = out.rem.mag_.empty() ? 0 : a.sign_;
    return out;
}

BigInt BigInt::operator/(const BigInt& b) const { return divmod(*this, b).quot; }
BigInt BigInt::operator%(const BigInt& b) const { return divmod(*this, b).rem; }

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(mag_, o.mag_) * (sign_ < 0 ? -1 : 1);
    return c <=> 0;
}

BigInt BigInt::from_string(std::string_view s) {
    BigInt out;
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw MalformedInput("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw MalformedInput("BigInt: bad digit in numeral");
        out *= BigInt(10);
        out += BigInt(s[i] - '0');
    }
    if (neg) out = -out;
    return out;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string digits;
    std::vector<uint32_t> cur = mag_;
    while (!cur.empty()) {
        // divide magnitude by 10^9, emit remainder
        uint64_t rem = 0;
        for (size_t i = cur.size(); i-- > 0;) {
            uint64_t x = (rem << 32) | cur[i];
            cur[i] = static_cast<uint32_t>(x / 1000000000u);
            rem = x % 1000000000u;
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

long long BigInt::to_long_long() const {
    if (sign_ == 0) return 0;
    if (mag_.size() > 2) throw Error("BigInt: value out of long long range");
    uint64_t u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<uint64_t>(mag_[1]) << 32;
    if (sign_ > 0) {
        if (u > 0x7fffffffffffffffull) throw Error("BigInt: value out of long long range");
        return static_cast<long long>(u);
    }
    if (u > 0x8000000000000000ull) throw Error("BigInt: value out of long long range");
    return -static_cast<long long>(u - 1) - 1;
}

BigRational::BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw Error("BigRational: zero denominator");
    reduce();
}

void BigRational::reduce() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_.abs(), den_);
    if (g > BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

BigRational BigRational::operator-() const {
    BigRational out = *this;
    out.num_ = -out.num_;
    return out;
}

BigRational operator+(const BigRational& a, const BigRational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

BigRational operator-(const BigRational& a, const BigRational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

BigRational operator*(const BigRational& a, const BigRational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw Error("BigRational: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string BigRational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt out(1);
    for (long long i = 1; i <= k; ++i) {
        out *= BigInt(n - k + i);
        out = out / BigInt(i);
    }
    return out;
}

} // namespace qsymb
