#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistroot {

using i64 = std::int64_t;

inline i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }
inline i64 lcm_i64(i64 a, i64 b) { return std::lcm(a, b); }

// Canonical representative of a modulo m, in [0, m).
inline i64 mod_reduce(i64 a, i64 m) {
    assert(m >= 1);
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of a modulo m. Requires gcd(a, m) = 1; inv(0, 1) = 0.
inline i64 mod_inverse(i64 a, i64 m) {
    assert(m >= 1);
    if (m == 1) return 0;
    i64 r0 = m, r1 = mod_reduce(a, m);
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        i64 t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_reduce(t0, m);
}

// Rational number of a full turn, kept reduced with 0 <= num < den.
// All angle bookkeeping is exact and happens modulo one full turn.
class TurnAngle {
public:
    TurnAngle() : num_(0), den_(1) {}
    TurnAngle(i64 num, i64 den) { set(num, den); }

    static TurnAngle zero() { return TurnAngle(); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    TurnAngle operator+(const TurnAngle& o) const {
        i64 g = gcd_i64(den_, o.den_);
        i64 d = den_ / g * o.den_;
        return TurnAngle(num_ * (o.den_ / g) + o.num_ * (den_ / g), d);
    }

    // Integer multiple, reduced mod 1.
    TurnAngle scaled(i64 k) const { return TurnAngle(num_ * k, den_); }

    TurnAngle negated() const { return TurnAngle(-num_, den_); }

    bool is_zero() const { return num_ == 0; }

    // True when (*this - o) is an integer multiple of 1/modulus.
    bool congruent_mod_inverse_of(const TurnAngle& o, i64 modulus) const {
        assert(modulus >= 1);
        TurnAngle d = *this + o.negated();
        // d = p/q reduced; d in (1/modulus)Z  <=>  q divides modulus * p ... with
        // gcd(p, q) = 1 this is q | modulus.
        return modulus % d.den_ == 0;
    }

    bool operator==(const TurnAngle& o) const { return num_ == o.num_ && den_ == o.den_; }
    auto operator<=>(const TurnAngle& o) const {
        return num_ * o.den_ <=> o.num_ * den_;
    }

    std::string str() const {
        if (num_ == 0) return "0";
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void set(i64 num, i64 den) {
        if (den <= 0) throw std::invalid_argument("TurnAngle: nonpositive denominator");
        num = mod_reduce(num, den);
        i64 g = gcd_i64(num, den);
        if (g == 0) g = 1;
        num_ = num / g;
        den_ = den / g;
    }
    i64 num_;
    i64 den_;
};

// Exact (signed) rational helper used for Euler-characteristic bookkeeping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(i64 n) : num_(n), den_(1) {}
    Rational(i64 n, i64 d) { set(n, d); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    Rational operator+(const Rational& o) const { return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rational operator-(const Rational& o) const { return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    auto operator<=>(const Rational& o) const { return num_ * o.den_ <=> o.num_ * den_; }

    bool is_integer() const { return den_ == 1; }
    i64 floor() const {
        i64 q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

private:
    void set(i64 n, i64 d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i64 g = gcd_i64(n < 0 ? -n : n, d);
        if (g == 0) g = 1;
        num_ = n / g;
        den_ = d / g;
    }
    i64 num_;
    i64 den_;
};

inline std::vector<i64> divisors_of(i64 n) {
    std::vector<i64> out;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace twistroot
