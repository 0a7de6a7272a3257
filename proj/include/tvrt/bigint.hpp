#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvrt {

// Sign-magnitude arbitrary-precision integer with 32-bit limbs.
// State sums accumulate thousands of exact rational terms, so the integer
// layer must never overflow; everything else in the library sits on top of
// this type.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v) {
        if (v < 0) {
            negative_ = true;
            // avoid overflow on INT64_MIN
            std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
            push_u64(mag);
        } else {
            push_u64(static_cast<std::uint64_t>(v));
        }
        trim();
    }

    static BigInt from_string(const std::string& s) {
        BigInt out;
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in numeral");
            out.mul_small(10);
            out.add_small(static_cast<std::uint32_t>(s[i] - '0'));
        }
        out.negative_ = neg;
        out.trim();
        return out;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }

    bool fits_int64() const {
        if (limbs_.size() > 2) return false;
        std::uint64_t m = mag_u64();
        if (negative_) return m <= (std::uint64_t(1) << 63);
        return m < (std::uint64_t(1) << 63);
    }
    std::int64_t to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        std::uint64_t m = mag_u64();
        return negative_ ? -static_cast<std::int64_t>(m - 1) - 1 : static_cast<std::int64_t>(m);
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt out;
        if (a.negative_ == b.negative_) {
            out.limbs_ = add_mag(a.limbs_, b.limbs_);
            out.negative_ = a.negative_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                out.limbs_ = sub_mag(a.limbs_, b.limbs_);
                out.negative_ = a.negative_;
            } else {
                out.limbs_ = sub_mag(b.limbs_, a.limbs_);
                out.negative_ = b.negative_;
            }
        }
        out.trim();
        return out;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
    BigInt operator-() const {
        BigInt out = *this;
        if (!out.is_zero()) out.negative_ = !out.negative_;
        return out;
    }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt out;
        out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = out.limbs_[i + j] + ai * b.limbs_[j] + carry;
                out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = out.limbs_[k] + carry;
                out.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        out.negative_ = a.negative_ != b.negative_;
        out.trim();
        return out;
    }

    // Truncated division (quotient rounds toward zero, as in C++).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        if (b.limbs_.size() == 1) {
            std::uint32_t rem = 0;
            q.limbs_.assign(a.limbs_.size(), 0);
            for (std::size_t i = a.limbs_.size(); i-- > 0;) {
                std::uint64_t cur = (static_cast<std::uint64_t>(rem) << 32) | a.limbs_[i];
                q.limbs_[i] = static_cast<std::uint32_t>(cur / b.limbs_[0]);
                rem = static_cast<std::uint32_t>(cur % b.limbs_[0]);
            }
            r = BigInt();
            if (rem) r.limbs_.push_back(rem);
        } else {
            divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
        }
        q.negative_ = a.negative_ != b.negative_;
        r.negative_ = a.negative_;
        q.trim();
        r.trim();
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_) return a.negative_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.negative_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt abs() const {
        BigInt out = *this;
        out.negative_ = false;
        return out;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.negative_ = false;
        b.negative_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    static BigInt pow(BigInt base, unsigned e) {
        BigInt out(1);
        while (e) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    double to_double() const {
        double out = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            out = out * 4294967296.0 + static_cast<double>(limbs_[i]);
        return negative_ ? -out : out;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> tmp = limbs_;
        std::string digits;
        while (!tmp.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            if (tmp.empty()) {
                std::string head = std::to_string(rem);
                std::reverse(head.begin(), head.end());
                digits += head;
            } else {
                for (int k = 0; k < 9; ++k) {
                    digits += static_cast<char>('0' + rem % 10);
                    rem /= 10;
                }
            }
        }
        if (negative_) digits += '-';
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    std::size_t limb_count() const { return limbs_.size(); }

private:
    std::vector<std::uint32_t> limbs_;  // little-endian magnitude, no trailing zeros
    bool negative_ = false;

    void push_u64(std::uint64_t v) {
        if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
    std::uint64_t mag_u64() const {
        std::uint64_t m = 0;
        if (limbs_.size() > 1) m = static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) m |= limbs_[0];
        return m;
    }
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }
    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    void add_small(std::uint32_t v) {
        std::uint64_t carry = v;
        for (auto& l : limbs_) {
            if (!carry) return;
            std::uint64_t cur = l + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> out = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < small.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(out[i]) + small[i] + carry;
            out[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        for (std::size_t i = small.size(); carry && i < out.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(out[i]) + carry;
            out[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) out.push_back(static_cast<std::uint32_t>(carry));
        return out;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(out[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = 0;
            if (cur < 0) {
                cur += (std::int64_t(1) << 32);
                borrow = 1;
            }
            out[i] = static_cast<std::uint32_t>(cur);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    // Knuth algorithm D on magnitudes; |a| >= |b|, b has >= 2 limbs.
    static void divmod_mag(const std::vector<std::uint32_t>& a_in,
                           const std::vector<std::uint32_t>& b_in,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r) {
        int shift = 0;
        std::uint32_t top = b_in.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
        std::vector<std::uint32_t> b = shl(b_in, shift);
        std::vector<std::uint32_t> u = shl(a_in, shift);
        u.push_back(0);
        const std::size_t n = b.size(), m = u.size() - n - 1;
        q.assign(m + 1, 0);
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qh = num / b[n - 1];
            std::uint64_t rh = num % b[n - 1];
            while (qh >= (std::uint64_t(1) << 32) ||
                   qh * b[n - 2] > ((rh << 32) | u[j + n - 2])) {
                --qh;
                rh += b[n - 1];
                if (rh >= (std::uint64_t(1) << 32)) break;
            }
            // multiply-subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qh * b[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
                borrow = 0;
                if (t < 0) {
                    t += (std::int64_t(1) << 32);
                    borrow = 1;
                }
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qh was one too large; add back
                t += (std::int64_t(1) << 32);
                --qh;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) + b[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(cur);
                    c2 = cur >> 32;
                }
                t += static_cast<std::int64_t>(c2);
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qh);
        }
        u.resize(n);
        r = shr(u, shift);
    }
    static std::vector<std::uint32_t> shl(const std::vector<std::uint32_t>& v, int s) {
        if (s == 0) return v;
        std::vector<std::uint32_t> out(v.size(), 0);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] = (v[i] << s) | carry;
            carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) >> (32 - s));
        }
        if (carry) out.push_back(carry);
        return out;
    }
    static std::vector<std::uint32_t> shr(const std::vector<std::uint32_t>& v, int s) {
        if (s == 0) return v;
        std::vector<std::uint32_t> out(v.size(), 0);
        std::uint32_t carry = 0;
        for (std::size_t i = v.size(); i-- > 0;) {
            out[i] = (v[i] >> s) | carry;
            carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) << (32 - s));
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }
};

}  // namespace tvrt
