#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace canal {

// Arbitrary-precision rational scalar.  Invariants: gcd(numerator,
// denominator) = 1, denominator > 0, zero is 0/1.  Every constructor
// canonicalizes, so two equal values always compare equal bitwise-free
// via mpq comparison.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}

    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(mpq_class&& q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q".
    explicit Rational(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty rational literal");
        int rc = mpq_set_str(v_.get_mpq_t(), s.c_str(), 10);
        if (rc != 0) throw std::invalid_argument("bad rational literal: " + s);
        if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("rational division by zero");
        Rational r;
        mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rational pow(const Rational& b, unsigned e) {
    Rational r(1), x(b);
    while (e) {
        if (e & 1u) r *= x;
        x *= x;
        e >>= 1u;
    }
    return r;
}

// gcd on rationals: gcd of numerators over lcm of denominators,
// nonnegative.  gcd(0, x) = |x|.
inline Rational rat_gcd(const Rational& a, const Rational& b) {
    mpz_class n = gcd(a.num(), b.num());
    mpz_class d = lcm(a.den(), b.den());
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace canal
