#pragma once

#include "canal/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace canal {

// Dense univariate polynomial in t over the rationals, coefficients low
// degree first, never stores trailing zeros.  degree() of the zero
// polynomial is -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    UniPoly(long n) : UniPoly(Rational(n)) {}
    UniPoly(int n) : UniPoly(Rational(n)) {}

    static UniPoly from_coeffs(std::vector<Rational> cs);
    static UniPoly from_coeffs(std::initializer_list<long> cs);
    static UniPoly var();                       // t
    static UniPoly monomial(const Rational& c, int k);

    // Declared degree for homogeneous treatment; never below the actual
    // degree.  Attached by the caller, not propagated by arithmetic.
    std::optional<int> formal_degree;
    void declare_formal(int d);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int k) const;
    const Rational& lc() const;                 // leading coefficient, nonzero poly only
    int size() const { return static_cast<int>(c_.size()); }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }
    friend UniPoly operator*(const Rational& s, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly shifted(int k) const;               // multiply by t^k
    UniPoly derivative() const;
    Rational eval(const Rational& t) const;
    UniPoly monic() const;                      // nonzero poly only
    // Positive rational c such that (1/c)*this has coprime integer
    // coefficients; zero polynomial has content 0.
    Rational content() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient and remainder of f by g over the rationals, deg r < deg g.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& f, const UniPoly& g);

// Exact quotient; throws std::domain_error when the remainder is nonzero.
UniPoly uni_exact_div(const UniPoly& f, const UniPoly& g);

// Monic gcd.  gcd(f, 0) = monic f.  Both zero is an error:
// "gcd of zero polynomials".
UniPoly uni_gcd(const UniPoly& f, const UniPoly& g);

UniPoly uni_lcm(const UniPoly& f, const UniPoly& g);

// Finite vector of univariate polynomials.
struct PolyVec {
    std::vector<UniPoly> e;

    PolyVec() = default;
    explicit PolyVec(int n) : e(n) {}
    PolyVec(std::initializer_list<UniPoly> xs) : e(xs) {}

    int size() const { return static_cast<int>(e.size()); }
    UniPoly& operator[](int i) { return e[i]; }
    const UniPoly& operator[](int i) const { return e[i]; }

    bool is_zero() const;
    int degree() const;                         // max entry degree, -1 if zero
    PolyVec derivative() const;
    // Coefficient vector at t^k across entries.
    std::vector<Rational> coeff_vector(int k) const;
    // Coefficient vector at t^degree(): the leading vector.
    std::vector<Rational> leading_vector() const;
    std::vector<Rational> eval(const Rational& t) const;

    friend PolyVec operator+(const PolyVec& a, const PolyVec& b);
    friend PolyVec operator-(const PolyVec& a, const PolyVec& b);
    friend PolyVec operator*(const UniPoly& h, const PolyVec& v);
    friend bool operator==(const PolyVec& a, const PolyVec& b) { return a.e == b.e; }
};

// All 2x2 minors of the 2xd matrix with rows a, b, pairs (i,j), i<j, in
// lexicographic order: [a_i*b_j - a_j*b_i].  Length d(d-1)/2.
PolyVec wedge(const PolyVec& a, const PolyVec& b);

// Monic gcd of all nonzero entries; error "gcd of zero polynomials" when
// the vector is zero.
UniPoly entries_gcd(const PolyVec& v);

}  // namespace canal
