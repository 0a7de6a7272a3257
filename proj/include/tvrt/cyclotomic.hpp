#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "tvrt/errors.hpp"
#include "tvrt/rational.hpp"

namespace tvrt {

namespace detail {

// Cyclotomic polynomials by exact integer division:
// x^n - 1 = prod_{d | n} Phi_d(x).
inline std::vector<BigInt> cyclotomic_poly(int n) {
    static std::map<int, std::vector<BigInt>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    // iterative to keep the lock simple: fill all divisors bottom-up
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m)) continue;
        std::vector<BigInt> poly(m + 1, BigInt(0));  // x^m - 1
        poly[0] = BigInt(-1);
        poly[m] = BigInt(1);
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            const auto& div = cache.at(d);
            // exact long division, divisor is monic
            std::vector<BigInt> quot(poly.size() - div.size() + 1, BigInt(0));
            std::vector<BigInt> rem = poly;
            for (std::size_t k = quot.size(); k-- > 0;) {
                BigInt c = rem[k + div.size() - 1];
                if (c.is_zero()) continue;
                quot[k] = c;
                for (std::size_t j = 0; j < div.size(); ++j)
                    rem[k + j] -= c * div[j];
            }
            poly = std::move(quot);
        }
        cache[m] = std::move(poly);
    }
    return cache.at(n);
}

}  // namespace detail

// Precomputed data for Q(zeta_n), zeta_n = exp(2*pi*i/n); for level r the
// library uses n = 4r so that zeta = exp(i*pi/2r) is the bracket variable.
class CyclotomicField {
public:
    explicit CyclotomicField(int n) : n_(n) {
        if (n < 1) throw DomainError("CyclotomicField: order must be positive");
        auto phi_poly = detail::cyclotomic_poly(n);
        degree_ = static_cast<int>(phi_poly.size()) - 1;
        min_poly_ = std::move(phi_poly);

        // reduction rows: x^m mod Phi_n for m = degree .. max_pow
        int max_pow = std::max(2 * degree_ - 2, n - 1);
        rows_.resize(std::max(0, max_pow - degree_ + 1));
        if (!rows_.empty()) {
            rows_[0].resize(degree_);
            for (int j = 0; j < degree_; ++j) rows_[0][j] = -min_poly_[j];
            for (std::size_t m = 1; m < rows_.size(); ++m) {
                std::vector<BigInt> shifted(degree_ + 1, BigInt(0));
                for (int j = 0; j < degree_; ++j) shifted[j + 1] = rows_[m - 1][j];
                BigInt top = shifted[degree_];
                shifted.pop_back();
                if (!top.is_zero())
                    for (int j = 0; j < degree_; ++j) shifted[j] += top * rows_[0][j];
                rows_[m] = std::move(shifted);
            }
        }

        zeta_pows_.resize(n_);
        const double two_pi = 6.283185307179586476925286766559;
        for (int k = 0; k < n_; ++k)
            zeta_pows_[k] = std::polar(1.0, two_pi * k / n_);
    }

    int order() const { return n_; }        // n, the root order (4r)
    int degree() const { return degree_; }  // phi(n)

    // reduced integer vector for x^m, any m >= 0 (m taken mod n)
    std::vector<BigInt> power_vector(long long m) const {
        long long k = m % n_;
        if (k < 0) k += n_;
        std::vector<BigInt> v(degree_, BigInt(0));
        if (k < degree_) {
            v[static_cast<std::size_t>(k)] = BigInt(1);
            return v;
        }
        return rows_[static_cast<std::size_t>(k - degree_)];
    }

    // reduce an integer polynomial of arbitrary degree into the power basis
    void reduce(std::vector<BigInt>& coeffs) const {
        for (std::size_t m = coeffs.size(); m-- > static_cast<std::size_t>(degree_);) {
            BigInt c = std::move(coeffs[m]);
            coeffs[m] = BigInt(0);
            if (c.is_zero()) continue;
            const auto& row = rows_[m - degree_];
            for (int j = 0; j < degree_; ++j) coeffs[j] += c * row[j];
        }
        coeffs.resize(degree_);
    }

    std::complex<double> zeta_power_numeric(long long k) const {
        long long m = k % n_;
        if (m < 0) m += n_;
        return zeta_pows_[static_cast<std::size_t>(m)];
    }

    const std::vector<BigInt>& minimal_polynomial() const { return min_poly_; }

    static const CyclotomicField& get(int n) {
        static std::map<int, std::unique_ptr<CyclotomicField>> registry;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto it = registry.find(n);
        if (it == registry.end())
            it = registry.emplace(n, std::make_unique<CyclotomicField>(n)).first;
        return *it->second;
    }

private:
    int n_;
    int degree_;
    std::vector<BigInt> min_poly_;               // monic, integer
    std::vector<std::vector<BigInt>> rows_;      // x^(degree+k) reduced
    std::vector<std::complex<double>> zeta_pows_;
};

// Exact element of Q(zeta_n) in the power basis modulo Phi_n.
//
// Internally stored as a rational scalar times a primitive integer vector
// (content 1, first nonzero entry positive). That keeps the hot path --
// products inside state sums -- in integer convolutions, and makes equality
// a plain component compare since the form is canonical.
class CycNumber {
public:
    CycNumber() : field_(nullptr) {}

    static CycNumber zero(int n) {
        CycNumber out;
        out.field_ = &CyclotomicField::get(n);
        out.scale_ = Rational(0);
        out.ivec_.assign(out.field_->degree(), BigInt(0));
        return out;
    }
    static CycNumber from_rational(int n, const Rational& q) {
        CycNumber out = zero(n);
        if (!q.is_zero()) {
            out.scale_ = q;
            out.ivec_[0] = BigInt(1);
        }
        return out;
    }
    static CycNumber from_int(int n, std::int64_t v) { return from_rational(n, Rational(v)); }
    // zeta^k (k may be negative)
    static CycNumber zeta_power(int n, long long k) {
        CycNumber out;
        out.field_ = &CyclotomicField::get(n);
        out.scale_ = Rational(1);
        out.ivec_ = out.field_->power_vector(k);
        out.canonicalize();
        return out;
    }

    bool valid() const { return field_ != nullptr; }
    int order() const { return field_->order(); }
    int degree() const { return field_->degree(); }
    bool is_zero() const { return scale_.is_zero(); }
    bool is_rational() const {
        if (is_zero()) return true;
        for (int j = 1; j < degree(); ++j)
            if (!ivec_[j].is_zero()) return false;
        return true;
    }
    Rational rational_value() const {
        if (is_zero()) return Rational(0);
        if (!is_rational()) throw ArithmeticError("CycNumber: value is not rational");
        return scale_ * Rational(ivec_[0]);
    }

    // exact coefficient of zeta^j in the reduced power basis
    Rational coeff(int j) const {
        if (is_zero()) return Rational(0);
        return scale_ * Rational(ivec_[j]);
    }
    std::vector<Rational> coeff_vector() const {
        std::vector<Rational> out;
        out.reserve(degree());
        for (int j = 0; j < degree(); ++j) out.push_back(coeff(j));
        return out;
    }

    friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
        check_levels(a, b);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // value = (pa/qa) A + (pb/qb) B = (pa qb A + pb qa B) / (qa qb)
        BigInt ma = a.scale_.num() * b.scale_.den();
        BigInt mb = b.scale_.num() * a.scale_.den();
        CycNumber out;
        out.field_ = a.field_;
        out.ivec_.resize(a.ivec_.size());
        for (std::size_t j = 0; j < a.ivec_.size(); ++j)
            out.ivec_[j] = ma * a.ivec_[j] + mb * b.ivec_[j];
        out.scale_ = Rational(BigInt(1), a.scale_.den() * b.scale_.den());
        out.canonicalize();
        return out;
    }
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }
    CycNumber operator-() const {
        CycNumber out = *this;
        out.scale_ = -out.scale_;
        return out;
    }
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
        check_levels(a, b);
        if (a.is_zero() || b.is_zero()) return zero(a.order());
        CycNumber out;
        out.field_ = a.field_;
        std::vector<BigInt> conv(a.ivec_.size() + b.ivec_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.ivec_.size(); ++i) {
            if (a.ivec_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.ivec_.size(); ++j) {
                if (b.ivec_[j].is_zero()) continue;
                conv[i + j] += a.ivec_[i] * b.ivec_[j];
            }
        }
        a.field_->reduce(conv);
        out.ivec_ = std::move(conv);
        out.scale_ = a.scale_ * b.scale_;
        out.canonicalize();
        return out;
    }
    CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
    CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
    CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

    CycNumber inverse() const {
        if (is_zero()) throw ArithmeticError("CycNumber: division by zero");
        // extended Euclid in Q[x] against the minimal polynomial
        const auto& mp = field_->minimal_polynomial();
        std::vector<Rational> r0(mp.size());
        for (std::size_t j = 0; j < mp.size(); ++j) r0[j] = Rational(mp[j]);
        std::vector<Rational> r1(ivec_.size());
        for (std::size_t j = 0; j < ivec_.size(); ++j) r1[j] = Rational(ivec_[j]);
        trim(r1);
        std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
        while (poly_degree(r1) > 0) {
            auto [q, r] = poly_divmod(r0, r1);
            auto s2 = poly_sub(s0, poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty())
            throw ArithmeticError("CycNumber: non-invertible element");  // cannot happen: Phi irreducible
        Rational c = r1[0];
        CycNumber out = zero(order());
        out.scale_ = Rational(1) / (scale_ * c);
        out.ivec_.assign(field_->degree(), BigInt(0));
        // s1 / c has rational coefficients; clear denominators into scale
        BigInt den(1);
        for (const auto& v : s1) den = den * v.den() / BigInt::gcd(den, v.den());
        for (std::size_t j = 0; j < s1.size() && j < out.ivec_.size(); ++j)
            out.ivec_[j] = s1[j].num() * (den / s1[j].den());
        out.scale_ = out.scale_ * Rational(BigInt(1), den);
        out.canonicalize();
        return out;
    }
    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

    // Galois automorphism zeta -> zeta^{-1}; complex conjugation under the
    // standard embedding.
    CycNumber conjugate() const {
        if (is_zero()) return *this;
        CycNumber out;
        out.field_ = field_;
        out.scale_ = scale_;
        out.ivec_.assign(field_->degree(), BigInt(0));
        int n = order();
        for (int k = 0; k < degree(); ++k) {
            if (ivec_[k].is_zero()) continue;
            auto row = field_->power_vector(n - k);
            for (int j = 0; j < degree(); ++j) out.ivec_[j] += ivec_[k] * row[j];
        }
        out.canonicalize();
        return out;
    }

    CycNumber pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNumber out = from_int(order(), 1);
        CycNumber base = *this;
        while (e) {
            if (e & 1) out *= base;
            if (e >>= 1) base *= base;
        }
        return out;
    }

    std::complex<double> to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j < degree(); ++j) {
            if (ivec_[j].is_zero()) continue;
            acc += ivec_[j].to_double() * field_->zeta_power_numeric(j);
        }
        return scale_.to_double() * acc;
    }

    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        check_levels(a, b);
        return a.scale_ == b.scale_ && a.ivec_ == b.ivec_;
    }
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int j = 0; j < degree(); ++j) {
            Rational c = coeff(j);
            if (c.is_zero()) continue;
            std::string term;
            Rational a = c.abs();
            if (j == 0) {
                term = a.to_string();
            } else {
                term = a.is_one() ? "" : a.to_string() + "*";
                term += "z";
                if (j > 1) term += "^" + std::to_string(j);
            }
            if (out.empty())
                out = (c.sign() < 0 ? "-" : "") + term;
            else
                out += (c.sign() < 0 ? " - " : " + ") + term;
        }
        return out;
    }

private:
    const CyclotomicField* field_;
    Rational scale_;
    std::vector<BigInt> ivec_;

    static void check_levels(const CycNumber& a, const CycNumber& b) {
        if (!a.field_ || !b.field_)
            throw LevelMismatchError("CycNumber: uninitialized operand");
        if (a.field_ != b.field_)
            throw LevelMismatchError("CycNumber: operands from different cyclotomic fields (orders " +
                                     std::to_string(a.order()) + " and " + std::to_string(b.order()) + ")");
    }

    void canonicalize() {
        bool all_zero = true;
        for (const auto& v : ivec_)
            if (!v.is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero || scale_.is_zero()) {
            scale_ = Rational(0);
            for (auto& v : ivec_) v = BigInt(0);
            return;
        }
        BigInt g(0);
        int first_sign = 0;
        for (const auto& v : ivec_) {
            if (v.is_zero()) continue;
            if (first_sign == 0) first_sign = v.sign();
            g = BigInt::gcd(g, v);
        }
        if (first_sign < 0) g = -g;
        if (!g.is_one()) {
            for (auto& v : ivec_) v = v / g;
            scale_ = scale_ * Rational(g);
        }
    }

    // little rational-polynomial helpers for the inverse
    static void trim(std::vector<Rational>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    }
    static int poly_degree(const std::vector<Rational>& p) {
        return static_cast<int>(p.size()) - 1;
    }
    static std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        trim(out);
        return out;
    }
    static std::vector<Rational> poly_sub(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
        std::vector<Rational> out = a;
        if (out.size() < b.size()) out.resize(b.size(), Rational(0));
        for (std::size_t j = 0; j < b.size(); ++j) out[j] -= b[j];
        trim(out);
        return out;
    }
    static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
        const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> rem = a, quot;
        trim(rem);
        if (b.empty()) throw ArithmeticError("poly_divmod: zero divisor");
        if (rem.size() >= b.size()) {
            quot.assign(rem.size() - b.size() + 1, Rational(0));
            for (std::size_t k = quot.size(); k-- > 0;) {
                if (rem.size() < b.size() + k) continue;
                Rational c = rem[k + b.size() - 1] / b.back();
                if (c.is_zero()) continue;
                quot[k] = c;
                for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
            }
        }
        trim(rem);
        trim(quot);
        return {quot, rem};
    }
};

}  // namespace tvrt
