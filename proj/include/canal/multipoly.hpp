#pragma once

#include "canal/rational.hpp"
#include "canal/unipoly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace canal {

// The six ambient variables, in order of decreasing precedence.
enum Var : int { VU = 0, VY0 = 1, VY1 = 2, VY2 = 3, VY3 = 4, VY4 = 5 };

extern const char* const kVarNames[6];

// Power product in (u, y0, y1, y2, y3, y4), packed so that unsigned
// comparison of keys is the graded lexicographic order with
// u > y0 > y1 > y2 > y3 > y4.  Byte layout, most significant first:
// total degree, then the six exponents, then one unused byte.
// Exponents and the total degree are capped at 255.
struct Monomial {
    uint64_t key = 0;

    static Monomial one() { return {}; }
    static Monomial var(int v, int e = 1);
    static Monomial from_exps(const std::array<int, 6>& es);

    int exp(int v) const { return static_cast<int>((key >> (8 * (6 - v))) & 0xffu); }
    std::array<int, 6> exps() const;
    int total_degree() const { return static_cast<int>(key >> 56); }

    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    Monomial div(const Monomial& m) const;  // requires m.divides(*this)

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.key == b.key; }
};

// Sparse multivariate polynomial over the rationals in the six ambient
// variables.  Terms are kept in descending graded lex order, so the first
// term is the leading term and iteration order is canonical.
class MultiPoly {
public:
    using TermMap = std::map<uint64_t, Rational, std::greater<uint64_t>>;

    MultiPoly() = default;

    static MultiPoly constant(const Rational& c);
    static MultiPoly var(int v, int e = 1);
    static MultiPoly term(const Rational& c, const Monomial& m);

    bool is_zero() const { return t_.empty(); }
    int num_terms() const { return static_cast<int>(t_.size()); }
    int total_degree() const;                       // -1 for zero
    Monomial leading_monomial() const;              // nonzero only
    const Rational& leading_coeff() const;          // nonzero only
    const Rational& coeff(const Monomial& m) const; // 0 if absent
    const TermMap& terms() const { return t_; }

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    int max_exp(int v) const;                       // max exponent of variable v
    Rational content() const;                       // positive, 0 for zero poly
    Rational evaluate(const std::array<Rational, 6>& x) const;
    // Ring substitution v_i -> images[i].
    MultiPoly substitute(const std::array<MultiPoly, 6>& images) const;
    // Substitute a single variable, all others mapped to themselves.
    MultiPoly substitute_var(int v, const MultiPoly& image) const;

    std::string str() const;

private:
    TermMap t_;
};

MultiPoly pow(const MultiPoly& b, unsigned e);

// Weighted degree: u counts 2, y0 counts 0, y1..y4 count 1.
// Zero polynomial is an error.
int weighted_degree(const MultiPoly& f);

// Scale so the coefficients are coprime integers and the coefficient of
// the graded-lex greatest monomial is positive.  Zero is an error.
MultiPoly canonical_form(const MultiPoly& f);

// Exact multivariate quotient, or nullopt when f is not divisible by g.
// g = 0 is an error.
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g);

// Mode for clearing u out of an implicit equation.
struct USubst {
    // gamma: u -> (y1^2+y2^2+y3^2-y4^2)/y0; offset(d): u -> (y1^2+y2^2+y3^2-d^2*y0^2)/y0.
    enum Kind { Gamma, Offset } kind;
    Rational d;  // only for Offset
    static USubst gamma() { return {Gamma, Rational(0)}; }
    static USubst offset(const Rational& d) { return {Offset, d}; }
};

// Replace u^a by Q^a * y0^(k-a) with k the maximal u-exponent, then strip
// the common power of y0 the substitution introduced (never more than k).
// Input without u passes through unchanged.
MultiPoly substitute_u(const MultiPoly& f, const USubst& mode);

// Polynomial in t whose coefficients are multivariate polynomials in the
// ambient variables.  Coefficients low degree first, trailing zeros trimmed.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(MultiPoly c);

    static TPoly from_coeffs(std::vector<MultiPoly> cs);
    static TPoly lift(const UniPoly& p);            // scalar coefficients

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const MultiPoly& coeff(int k) const;
    const MultiPoly& lc() const;                    // nonzero only

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { a += b; return a; }
    friend TPoly operator-(TPoly a, const TPoly& b) { a -= b; return a; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const MultiPoly& s, const TPoly& p);
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

    TPoly derivative() const;
    // Apply a substitution to every coefficient.
    TPoly map_coeffs(const std::array<MultiPoly, 6>& images) const;

private:
    void trim();
    std::vector<MultiPoly> c_;
};

// Sum_i v[i](t) * var(vars[i]): a t-polynomial with linear coefficients.
TPoly dot_with_vars(const PolyVec& v, const std::vector<int>& vars);

// Identity substitution images, for building variable maps.
std::array<MultiPoly, 6> identity_images();

}  // namespace canal
