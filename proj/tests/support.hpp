#pragma once

#include "doctest.h"

#include "canal/determinant.hpp"
#include "canal/liegeom.hpp"
#include "canal/mubasis.hpp"
#include "canal/multipoly.hpp"
#include "canal/pipeline.hpp"
#include "canal/rational.hpp"
#include "canal/unipoly.hpp"

#include <random>
#include <vector>

namespace ct {

using namespace canal;

inline UniPoly P(std::initializer_list<long> cs) { return UniPoly::from_coeffs(cs); }

inline const MultiPoly U  = MultiPoly::var(VU);
inline const MultiPoly Y0 = MultiPoly::var(VY0);
inline const MultiPoly Y1 = MultiPoly::var(VY1);
inline const MultiPoly Y2 = MultiPoly::var(VY2);
inline const MultiPoly Y3 = MultiPoly::var(VY3);
inline const MultiPoly Y4 = MultiPoly::var(VY4);
inline MultiPoly C(long n) { return MultiPoly::constant(Rational(n)); }
inline MultiPoly C(long n, long d) { return MultiPoly::constant(Rational(n, d)); }

inline bool same_projective(const MultiPoly& a, const MultiPoly& b) {
    return canonical_form(a) == canonical_form(b);
}

// Sphere family centered on the y3 axis whose envelope is the ellipsoid
// 25y1^2 + 25y2^2 + 9y3^2 = 225: tuple (1+t^2, 0, 0, 8t, 3-3t^2).
inline SpineCurve ellipse_spine() {
    UniPoly den = P({1, 0, 1});
    return make_spine({P({0}), P({0}), P({0, 8}), P({3, 0, -3})},
                      {den, den, den, den});
}

// Polynomial spine of degree 2: tuple (1, 3t^2+1, 4t^2+t, 0, 5t^2).
inline SpineCurve poly_spine() {
    UniPoly one = P({1});
    return make_spine({P({1, 0, 3}), P({0, 1, 4}), P({0}), P({0, 0, 5})},
                      {one, one, one, one});
}

// Degree 4 spine on Viviani's curve (sphere cut by a tangent cylinder)
// with unit radius: tuple
// ((1+t^2)^2, (1-t^2)^2, 2t(1-t^2), 2t(1+t^2), (1+t^2)^2).
inline SpineCurve viviani_spine() {
    UniPoly den2 = P({1, 0, 2, 0, 1});
    UniPoly den1 = P({1, 0, 1});
    UniPoly one = P({1});
    return make_spine({P({1, 0, -2, 0, 1}), P({0, 2, 0, -2}), P({0, 2}), one},
                      {den2, den2, den1, one});
}

// Torus: unit circle spine in the y1y2 plane, constant radius 1/2;
// tuple (2+2t^2, 2-2t^2, 4t, 0, 1+t^2).
inline SpineCurve torus_spine() {
    UniPoly den = P({1, 0, 1});
    return make_spine({P({1, 0, -1}), P({0, 2}), P({0}), P({1})},
                      {den, den, P({1}), P({2})});
}

inline Rational rand_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-99, 99);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

inline UniPoly rand_poly(std::mt19937_64& rng, int deg, bool exact_degree) {
    std::uniform_int_distribution<long> c(-9, 9);
    std::vector<Rational> cs(deg + 1);
    for (auto& x : cs) x = Rational(c(rng));
    if (exact_degree)
        while (cs[deg].is_zero()) cs[deg] = Rational(c(rng));
    return UniPoly::from_coeffs(cs);
}

// Random spine of exact degree n, optionally with a shared degree n
// denominator (nonzero constant term).  Resamples until the normalized
// tuple still has degree n.
inline SpineCurve random_spine(std::mt19937_64& rng, int n, bool rational_den) {
    std::uniform_int_distribution<long> c(-9, 9);
    for (;;) {
        UniPoly den = P({1});
        if (rational_den) {
            den = rand_poly(rng, n, true);
            while (den.coeff(0).is_zero()) den = rand_poly(rng, n, true);
        }
        std::array<UniPoly, 4> nums;
        for (auto& f : nums) f = rand_poly(rng, n, false);
        if (!rational_den) nums[std::uniform_int_distribution<int>(0, 3)(rng)] =
            rand_poly(rng, n, true);
        SpineCurve s = make_spine(nums, {den, den, den, den});
        if (s.n == n) return s;
    }
}

// Rejection sample until general_type_check accepts; counts every draw.
inline SpineCurve random_general_spine(std::mt19937_64& rng, int n, int& attempts) {
    for (;;) {
        ++attempts;
        SpineCurve s = random_spine(rng, n, true);
        try {
            if (general_type_check(s, rng()).general_type) return s;
        } catch (const std::runtime_error&) {
        }
    }
}

// Two generator pairs span the same saturated module exactly when their
// minor vectors agree after removing the gcd, up to a scalar.
inline bool same_module(const PolyVec& A1, const PolyVec& B1, const PolyVec& A2,
                        const PolyVec& B2) {
    PolyVec P1 = wedge(A1, B1), P2 = wedge(A2, B2);
    if (P1.is_zero() || P2.is_zero() || P1.size() != P2.size()) return false;
    UniPoly g1 = entries_gcd(P1), g2 = entries_gcd(P2);
    for (auto& p : P1.e)
        if (!p.is_zero()) p = uni_exact_div(p, g1);
    for (auto& p : P2.e)
        if (!p.is_zero()) p = uni_exact_div(p, g2);
    for (int i = 0; i < P1.size(); ++i)
        for (int j = i + 1; j < P1.size(); ++j)
            if (P1[i] * P2[j] != P1[j] * P2[i]) return false;
    return true;
}

// Laplace expansion along the first row; reference for the fast
// determinants, fine up to 5x5.
inline MultiPoly cofactor_det(const MpMatrix& m) {
    int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    MultiPoly acc;
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        MpMatrix sub;
        sub.reserve(n - 1);
        for (int i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            row.reserve(n - 1);
            for (int jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            sub.push_back(std::move(row));
        }
        MultiPoly term = m[0][j] * cofactor_det(sub);
        if (j % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

// Sparse random polynomial in u, y0, y1 with exponents <= 2.
inline MultiPoly rand_mpoly(std::mt19937_64& rng, int nterms) {
    std::uniform_int_distribution<long> c(-9, 9);
    std::uniform_int_distribution<int> e(0, 2);
    MultiPoly f;
    for (int i = 0; i < nterms; ++i) {
        Monomial m = Monomial::from_exps({e(rng), e(rng), e(rng), 0, 0, 0});
        f.add_term(m, Rational(c(rng)));
    }
    return f;
}

inline std::array<Rational, 6> rand_point(std::mt19937_64& rng) {
    std::array<Rational, 6> p;
    for (auto& x : p) x = rand_rat(rng);
    return p;
}

}  // namespace ct
